"""Type-directed conversion checking with η, and cumulativity as subtyping."""

from __future__ import annotations

from . import values as v
from .evaluate import apply, project_fst, project_snd

# Definition unfolding shares value objects aggressively, so large proof
# values are compared against themselves constantly.  Physical identity
# implies definitional equality (values are immutable), and results for
# a pair of value objects never change, so conversion is memoized on
# object identity.  `_retain` pins the keyed objects alive so that ids
# are not recycled while their cache entries exist.
#
# For the identity memo to hit, η-expansion must be identity-stable:
# expanding the same value twice has to yield the *same* result object.
# Fresh variables are interned per level (values.fresh), and the
# application/projection steps used during conversion are memoized on
# object identity below (`_apply_fresh` and friends).
_memo: dict = {}
_retain: list = []
_app_memo: dict = {}
_app_retain: list = []
_MEMO_LIMIT = 4_000_000


def _memo_trim() -> None:
    if len(_memo) + len(_app_memo) > _MEMO_LIMIT:
        _memo.clear()
        _retain.clear()
        _app_memo.clear()
        _app_retain.clear()


def _apply_fresh(fn: v.Value, depth: int) -> v.Value:
    """`apply(fn, fresh(depth))`, identity-stable across calls."""
    key = (id(fn), depth)
    result = _app_memo.get(key)
    if result is None:
        result = apply(fn, v.fresh(depth))
        _app_memo[key] = result
        _app_retain.append(fn)
    return result


def _call_fresh(closure: v.Closure, depth: int) -> v.Value:
    """Apply a closure to fresh variables at `depth`, identity-stable."""
    key = (id(closure), depth, -1)
    result = _app_memo.get(key)
    if result is None:
        args = tuple(v.fresh(depth + i) for i in range(closure.arity))
        result = closure(*args)
        _app_memo[key] = result
        _app_retain.append(closure)
    return result


def _call1(closure: v.Closure, arg: v.Value) -> v.Value:
    """Apply an arity-1 closure to `arg`, identity-stable."""
    key = (id(closure), id(arg), -4)
    result = _app_memo.get(key)
    if result is None:
        result = closure(arg)
        _app_memo[key] = result
        _app_retain.append(closure)
        _app_retain.append(arg)
    return result


def _fst(value: v.Value) -> v.Value:
    if isinstance(value, v.VPair):
        return value.fst
    key = (id(value), -2)
    result = _app_memo.get(key)
    if result is None:
        result = project_fst(value)
        _app_memo[key] = result
        _app_retain.append(value)
    return result


def _snd(value: v.Value) -> v.Value:
    if isinstance(value, v.VPair):
        return value.snd
    key = (id(value), -3)
    result = _app_memo.get(key)
    if result is None:
        result = project_snd(value)
        _app_memo[key] = result
        _app_retain.append(value)
    return result


def conv(depth: int, a: v.Value, b: v.Value, ty: v.Value | None = None, *, eta_sigma: bool = True) -> bool:
    """Decide definitional equality of `a` and `b`.

    When `ty` is given the comparison is type-directed: η for Π always,
    η for Σ when enabled, and every pair of values is equal at Unit.
    Without a type the comparison is structural with untyped η-expansion
    for lambdas and pairs (used inside neutral spines).
    """
    if a is b:
        return True
    match ty:
        case v.VPi(_, cod):
            return conv(
                depth + 1,
                _apply_fresh(a, depth),
                _apply_fresh(b, depth),
                _call_fresh(cod, depth),
                eta_sigma=eta_sigma,
            )
        case v.VSigma(fst_ty, snd_ty) if eta_sigma:
            fa, fb = _fst(a), _fst(b)
            if not conv(depth, fa, fb, fst_ty, eta_sigma=eta_sigma):
                return False
            return conv(depth, _snd(a), _snd(b), _call1(snd_ty, fa), eta_sigma=eta_sigma)
        case v.VUnit():
            return True
        case _:
            return conv_structural(depth, a, b, eta_sigma=eta_sigma)


def conv_structural(depth: int, a: v.Value, b: v.Value, *, eta_sigma: bool) -> bool:
    if a is b:
        return True
    key = (id(a), id(b), eta_sigma)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    result = _conv_structural(depth, a, b, eta_sigma=eta_sigma)
    _memo_trim()
    _memo[key] = result
    _retain.append(a)
    _retain.append(b)
    return result


def _conv_structural(depth: int, a: v.Value, b: v.Value, *, eta_sigma: bool) -> bool:
    # untyped η for functions and pairs
    if isinstance(a, v.VLam) or isinstance(b, v.VLam):
        return conv_structural(
            depth + 1, _apply_fresh(a, depth), _apply_fresh(b, depth), eta_sigma=eta_sigma
        )
    if eta_sigma and (isinstance(a, v.VPair) or isinstance(b, v.VPair)):
        if not _projectable(a) or not _projectable(b):
            return False
        return conv_structural(
            depth, _fst(a), _fst(b), eta_sigma=eta_sigma
        ) and conv_structural(depth, _snd(a), _snd(b), eta_sigma=eta_sigma)

    match (a, b):
        case (v.VUniv(i), v.VUniv(j)):
            return i == j
        case (v.VPi(d1, c1), v.VPi(d2, c2)) | (v.VSigma(d1, c1), v.VSigma(d2, c2)):
            if type(a) is not type(b):
                return False
            if not conv_structural(depth, d1, d2, eta_sigma=eta_sigma):
                return False
            return conv_structural(
                depth + 1, _call_fresh(c1, depth), _call_fresh(c2, depth), eta_sigma=eta_sigma
            )
        case (v.VPair(x1, y1), v.VPair(x2, y2)):
            return conv_structural(depth, x1, x2, eta_sigma=eta_sigma) and conv_structural(
                depth, y1, y2, eta_sigma=eta_sigma
            )
        case (v.VId(t1, l1, r1), v.VId(t2, l2, r2)):
            return (
                conv_structural(depth, t1, t2, eta_sigma=eta_sigma)
                and conv_structural(depth, l1, l2, eta_sigma=eta_sigma)
                and conv_structural(depth, r1, r2, eta_sigma=eta_sigma)
            )
        case (v.VRefl(x1), v.VRefl(x2)):
            return conv_structural(depth, x1, x2, eta_sigma=eta_sigma)
        case (v.VSuc(p1), v.VSuc(p2)):
            return conv_structural(depth, p1, p2, eta_sigma=eta_sigma)
        case (v.VNeutral(h1, s1), v.VNeutral(h2, s2)):
            return h1 == h2 and spine_eq(depth, s1, s2, eta_sigma=eta_sigma)
        case (
            (v.VNat(), v.VNat())
            | (v.VZero(), v.VZero())
            | (v.VEmpty(), v.VEmpty())
            | (v.VUnit(), v.VUnit())
            | (v.VStar(), v.VStar())
            | (v.VTwo(), v.VTwo())
            | (v.VBit0(), v.VBit0())
            | (v.VBit1(), v.VBit1())
        ):
            return True
        case _:
            return False


def _projectable(value: v.Value) -> bool:
    return isinstance(value, (v.VPair, v.VNeutral))


def closure_eq(depth: int, c1: v.Closure, c2: v.Closure, *, eta_sigma: bool) -> bool:
    if c1.arity != c2.arity:
        return False
    return conv_structural(
        depth + c1.arity, _call_fresh(c1, depth), _call_fresh(c2, depth), eta_sigma=eta_sigma
    )


def spine_eq(depth: int, s1: tuple, s2: tuple, *, eta_sigma: bool) -> bool:
    if len(s1) != len(s2):
        return False
    for f1, f2 in zip(s1, s2):
        match (f1, f2):
            case (v.AppF(a1), v.AppF(a2)):
                if not conv_structural(depth, a1, a2, eta_sigma=eta_sigma):
                    return False
            case (v.FstF(), v.FstF()) | (v.SndF(), v.SndF()):
                pass
            case (v.JF(m1, b1), v.JF(m2, b2)):
                if not (
                    closure_eq(depth, m1, m2, eta_sigma=eta_sigma)
                    and closure_eq(depth, b1, b2, eta_sigma=eta_sigma)
                ):
                    return False
            case (v.NatElimF(m1, z1, st1), v.NatElimF(m2, z2, st2)):
                if not (
                    closure_eq(depth, m1, m2, eta_sigma=eta_sigma)
                    and conv_structural(depth, z1, z2, eta_sigma=eta_sigma)
                    and closure_eq(depth, st1, st2, eta_sigma=eta_sigma)
                ):
                    return False
            case (v.TwoElimF(m1, a1, b1), v.TwoElimF(m2, a2, b2)):
                if not (
                    closure_eq(depth, m1, m2, eta_sigma=eta_sigma)
                    and conv_structural(depth, a1, a2, eta_sigma=eta_sigma)
                    and conv_structural(depth, b1, b2, eta_sigma=eta_sigma)
                ):
                    return False
            case (v.EmptyElimF(m1), v.EmptyElimF(m2)):
                if not closure_eq(depth, m1, m2, eta_sigma=eta_sigma):
                    return False
            case _:
                return False
    return True


def subtype(depth: int, a: v.Value, b: v.Value, *, eta_sigma: bool = True) -> bool:
    """Cumulativity: universe indices may grow; Π codomains and Σ components
    are covariant, Π domains invariant."""
    if a is b:
        return True
    match (a, b):
        case (v.VUniv(i), v.VUniv(j)):
            return i <= j
        case (v.VPi(d1, c1), v.VPi(d2, c2)):
            if not conv_structural(depth, d1, d2, eta_sigma=eta_sigma):
                return False
            return subtype(
                depth + 1, _call_fresh(c1, depth), _call_fresh(c2, depth), eta_sigma=eta_sigma
            )
        case (v.VSigma(d1, c1), v.VSigma(d2, c2)):
            if not subtype(depth, d1, d2, eta_sigma=eta_sigma):
                return False
            return subtype(
                depth + 1, _call_fresh(c1, depth), _call_fresh(c2, depth), eta_sigma=eta_sigma
            )
        case _:
            return conv_structural(depth, a, b, eta_sigma=eta_sigma)
