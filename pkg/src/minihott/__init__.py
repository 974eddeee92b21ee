"""minihott: a small dependent type checker with a univalence axiom
registry, a generated proof corpus, and a finite-model oracle."""

__version__ = "0.1.0"
