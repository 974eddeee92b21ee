"""Core term syntax: de Bruijn indexed, immutable.

Binders are positional: `Pi.cod`, `Lam.body`, `Sigma.snd_ty` bind one
variable; `J.motive` binds three (endpoint, endpoint, path); `J.base`,
`NatElim.motive`, `TwoElim.motive` and `EmptyElim.motive` bind one;
`NatElim.step` binds two (predecessor, recursive result).
"""

from __future__ import annotations

from dataclasses import dataclass


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Term):
    index: int


@dataclass(frozen=True, slots=True)
class Univ(Term):
    level: int


@dataclass(frozen=True, slots=True)
class Pi(Term):
    dom: Term
    cod: Term  # binds 1


@dataclass(frozen=True, slots=True)
class Lam(Term):
    body: Term  # binds 1


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Sigma(Term):
    fst_ty: Term
    snd_ty: Term  # binds 1


@dataclass(frozen=True, slots=True)
class Pair(Term):
    fst: Term
    snd: Term


@dataclass(frozen=True, slots=True)
class Fst(Term):
    pair: Term


@dataclass(frozen=True, slots=True)
class Snd(Term):
    pair: Term


@dataclass(frozen=True, slots=True)
class Id(Term):
    ty: Term
    lhs: Term
    rhs: Term


@dataclass(frozen=True, slots=True)
class Refl(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class J(Term):
    motive: Term  # binds 3: (x, y, p : Id x y)
    base: Term  # binds 1: (x)
    path: Term


@dataclass(frozen=True, slots=True)
class Nat(Term):
    pass


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class Suc(Term):
    pred: Term


@dataclass(frozen=True, slots=True)
class NatElim(Term):
    motive: Term  # binds 1
    base: Term
    step: Term  # binds 2: (n, ih)
    target: Term


@dataclass(frozen=True, slots=True)
class Empty(Term):
    pass


@dataclass(frozen=True, slots=True)
class EmptyElim(Term):
    motive: Term  # binds 1
    target: Term


@dataclass(frozen=True, slots=True)
class Unit(Term):
    pass


@dataclass(frozen=True, slots=True)
class Star(Term):
    pass


@dataclass(frozen=True, slots=True)
class Two(Term):
    pass


@dataclass(frozen=True, slots=True)
class Bit0(Term):
    pass


@dataclass(frozen=True, slots=True)
class Bit1(Term):
    pass


@dataclass(frozen=True, slots=True)
class TwoElim(Term):
    motive: Term  # binds 1
    if0: Term
    if1: Term
    target: Term


@dataclass(frozen=True, slots=True)
class Ref(Term):
    """Reference to a top-level definition or axiom."""

    name: str


@dataclass(frozen=True, slots=True)
class Ann(Term):
    term: Term
    ty: Term


def nat_literal(n: int) -> Term:
    t: Term = Zero()
    for _ in range(n):
        t = Suc(t)
    return t


def as_nat_literal(t: Term) -> int | None:
    n = 0
    while isinstance(t, Suc):
        t = t.pred
        n += 1
    return n if isinstance(t, Zero) else None
