"""Declarations, shared between the surface layer and the checker."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import Span
from .terms import Term


@dataclass(frozen=True, slots=True)
class Declaration:
    """A resolved top-level declaration (core syntax)."""

    kind: str  # "def" | "axiom" | "goal"
    name: str
    ty: Term
    body: Term | None  # absent exactly for axioms
    span: Span = Span(0, 0)
    source_ref: str = ""  # free-text lemma tag carried from the surface file


@dataclass
class ModuleTags:
    """File-level pragmas (`--! tag`), e.g. requires-ua, requires-funext."""

    tags: list[str] = field(default_factory=list)
