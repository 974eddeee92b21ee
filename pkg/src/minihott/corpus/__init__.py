"""Generated proof corpus: prelude, generic lemma library, per-level theorems."""
