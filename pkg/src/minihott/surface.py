"""Surface syntax tree: named variables, every node carries a source span."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import Span


class STerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class SVar(STerm):
    name: str
    span: Span


@dataclass(frozen=True, slots=True)
class SUniv(STerm):
    level: int
    span: Span


@dataclass(frozen=True, slots=True)
class SPi(STerm):
    binder: str | None  # None for the non-dependent arrow
    dom: STerm
    cod: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SSigma(STerm):
    binder: str | None
    fst_ty: STerm
    snd_ty: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SLam(STerm):
    names: tuple[str, ...]
    body: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SApp(STerm):
    fn: STerm
    arg: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SPair(STerm):
    fst: STerm
    snd: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SAnn(STerm):
    term: STerm
    ty: STerm
    span: Span


@dataclass(frozen=True, slots=True)
class SConst(STerm):
    """Nullary builtin: Nat, Empty, Unit, Two, star, zero2, one2."""

    name: str
    span: Span


@dataclass(frozen=True, slots=True)
class SNatLit(STerm):
    value: int
    span: Span


@dataclass(frozen=True, slots=True)
class SElim(STerm):
    """Fixed-arity builtin head: fst, snd, suc, refl, Id, J, natElim, twoElim, emptyElim."""

    head: str
    args: tuple[STerm, ...]
    span: Span


@dataclass(frozen=True, slots=True)
class SDecl:
    kind: str  # "def" | "axiom" | "goal"
    name: str
    ty: STerm
    body: STerm | None
    span: Span
    source_ref: str = ""


@dataclass
class SModule:
    decls: list[SDecl] = field(default_factory=list)
    pragmas: list[str] = field(default_factory=list)
