"""Evaluation into the semantic domain and quotation back to terms."""

from __future__ import annotations

from . import terms as t
from . import values as v


class KernelBug(Exception):
    """Internal invariant violation (ill-scoped term reached eval)."""


# Evaluation is memoized on (globals, environment, term) identity.
# Environments at closure-application boundaries are interned
# (values.intern_env), terms are immutable syntax shared per parse, and
# globals are append-only, so a cached result never goes stale.  The
# retain list pins keyed objects so their ids are not recycled.
_memo: dict = {}
_retain: list = []
_MEMO_LIMIT = 4_000_000


def evaluate(glob, env: tuple, term: t.Term) -> v.Value:
    key = (id(glob), id(env), id(term))
    result = _memo.get(key)
    if result is None:
        result = _evaluate(glob, env, term)
        if len(_memo) > _MEMO_LIMIT:
            _memo.clear()
            _retain.clear()
        _memo[key] = result
        _retain.append(env)
        _retain.append(term)
        _retain.append(glob)
    return result


def _evaluate(glob, env: tuple, term: t.Term) -> v.Value:
    match term:
        case t.Var(index):
            if index >= len(env):
                raise KernelBug(f"unbound de Bruijn index {index} at depth {len(env)}")
            return env[-1 - index]
        case t.Univ(level):
            return v.VUniv(level)
        case t.Pi(dom, cod):
            return v.VPi(evaluate(glob, env, dom), v.Closure(glob, env, cod))
        case t.Lam(body):
            return v.VLam(v.Closure(glob, env, body))
        case t.App(fn, arg):
            return apply(evaluate(glob, env, fn), evaluate(glob, env, arg))
        case t.Sigma(fst_ty, snd_ty):
            return v.VSigma(evaluate(glob, env, fst_ty), v.Closure(glob, env, snd_ty))
        case t.Pair(fst, snd):
            return v.VPair(evaluate(glob, env, fst), evaluate(glob, env, snd))
        case t.Fst(pair):
            return project_fst(evaluate(glob, env, pair))
        case t.Snd(pair):
            return project_snd(evaluate(glob, env, pair))
        case t.Id(ty, lhs, rhs):
            return v.VId(
                evaluate(glob, env, ty),
                evaluate(glob, env, lhs),
                evaluate(glob, env, rhs),
            )
        case t.Refl(arg):
            return v.VRefl(evaluate(glob, env, arg))
        case t.J(motive, base, path):
            return j_elim(
                v.Closure(glob, env, motive, 3),
                v.Closure(glob, env, base, 1),
                evaluate(glob, env, path),
            )
        case t.Nat():
            return v.VNat()
        case t.Zero():
            return v.VZero()
        case t.Suc(pred):
            return v.VSuc(evaluate(glob, env, pred))
        case t.NatElim(motive, base, step, target):
            return nat_elim(
                v.Closure(glob, env, motive, 1),
                evaluate(glob, env, base),
                v.Closure(glob, env, step, 2),
                evaluate(glob, env, target),
            )
        case t.Empty():
            return v.VEmpty()
        case t.EmptyElim(motive, target):
            return empty_elim(v.Closure(glob, env, motive, 1), evaluate(glob, env, target))
        case t.Unit():
            return v.VUnit()
        case t.Star():
            return v.VStar()
        case t.Two():
            return v.VTwo()
        case t.Bit0():
            return v.VBit0()
        case t.Bit1():
            return v.VBit1()
        case t.TwoElim(motive, if0, if1, target):
            return two_elim(
                v.Closure(glob, env, motive, 1),
                evaluate(glob, env, if0),
                evaluate(glob, env, if1),
                evaluate(glob, env, target),
            )
        case t.Ref(name):
            return glob.value_of(name)
        case t.Ann(term_, _):
            return evaluate(glob, env, term_)
        case _:
            raise KernelBug(f"evaluate: unhandled term {term!r}")


def apply(fn: v.Value, arg: v.Value) -> v.Value:
    match fn:
        case v.VLam(body):
            return body(arg)
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.AppF(arg),))
        case _:
            raise KernelBug(f"apply of non-function value {type(fn).__name__}")


def apply_many(fn: v.Value, *args: v.Value) -> v.Value:
    for a in args:
        fn = apply(fn, a)
    return fn


def project_fst(pair: v.Value) -> v.Value:
    match pair:
        case v.VPair(fst, _):
            return fst
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.FstF(),))
        case _:
            raise KernelBug("fst of non-pair value")


def project_snd(pair: v.Value) -> v.Value:
    match pair:
        case v.VPair(_, snd):
            return snd
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.SndF(),))
        case _:
            raise KernelBug("snd of non-pair value")


def j_elim(motive: v.Closure, base: v.Closure, path: v.Value) -> v.Value:
    match path:
        case v.VRefl(arg):
            return base(arg)
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.JF(motive, base),))
        case _:
            raise KernelBug("J applied to non-path value")


def nat_elim(motive: v.Closure, base: v.Value, step: v.Closure, target: v.Value) -> v.Value:
    match target:
        case v.VZero():
            return base
        case v.VSuc(pred):
            return step(pred, nat_elim(motive, base, step, pred))
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.NatElimF(motive, base, step),))
        case _:
            raise KernelBug("natElim applied to non-numeral value")


def two_elim(motive: v.Closure, if0: v.Value, if1: v.Value, target: v.Value) -> v.Value:
    match target:
        case v.VBit0():
            return if0
        case v.VBit1():
            return if1
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.TwoElimF(motive, if0, if1),))
        case _:
            raise KernelBug("twoElim applied to non-boolean value")


def empty_elim(motive: v.Closure, target: v.Value) -> v.Value:
    match target:
        case v.VNeutral(head, spine):
            return v.VNeutral(head, spine + (v.EmptyElimF(motive),))
        case _:
            raise KernelBug("emptyElim applied to a closed value")


# --- quotation ---


def quote(depth: int, value: v.Value) -> t.Term:
    match value:
        case v.VUniv(level):
            return t.Univ(level)
        case v.VPi(dom, cod):
            return t.Pi(quote(depth, dom), quote(depth + 1, cod(v.fresh(depth))))
        case v.VLam(body):
            return t.Lam(quote(depth + 1, body(v.fresh(depth))))
        case v.VSigma(fst_ty, snd_ty):
            return t.Sigma(quote(depth, fst_ty), quote(depth + 1, snd_ty(v.fresh(depth))))
        case v.VPair(fst, snd):
            return t.Pair(quote(depth, fst), quote(depth, snd))
        case v.VId(ty, lhs, rhs):
            return t.Id(quote(depth, ty), quote(depth, lhs), quote(depth, rhs))
        case v.VRefl(arg):
            return t.Refl(quote(depth, arg))
        case v.VNat():
            return t.Nat()
        case v.VZero():
            return t.Zero()
        case v.VSuc(pred):
            return t.Suc(quote(depth, pred))
        case v.VEmpty():
            return t.Empty()
        case v.VUnit():
            return t.Unit()
        case v.VStar():
            return t.Star()
        case v.VTwo():
            return t.Two()
        case v.VBit0():
            return t.Bit0()
        case v.VBit1():
            return t.Bit1()
        case v.VNeutral(head, spine):
            return quote_neutral(depth, head, spine)
        case _:
            raise KernelBug(f"quote: unhandled value {value!r}")


def quote_closure(depth: int, closure: v.Closure) -> t.Term:
    args = tuple(v.fresh(depth + i) for i in range(closure.arity))
    return quote(depth + closure.arity, closure(*args))


def quote_neutral(depth: int, head, spine: tuple) -> t.Term:
    match head:
        case v.VVar(level):
            term: t.Term = t.Var(depth - 1 - level)
        case v.VAxiom(name):
            term = t.Ref(name)
        case _:
            raise KernelBug("bad neutral head")
    for frame in spine:
        match frame:
            case v.AppF(arg):
                term = t.App(term, quote(depth, arg))
            case v.FstF():
                term = t.Fst(term)
            case v.SndF():
                term = t.Snd(term)
            case v.JF(motive, base):
                term = t.J(quote_closure(depth, motive), quote_closure(depth, base), term)
            case v.NatElimF(motive, base, step):
                term = t.NatElim(
                    quote_closure(depth, motive),
                    quote(depth, base),
                    quote_closure(depth, step),
                    term,
                )
            case v.TwoElimF(motive, if0, if1):
                term = t.TwoElim(
                    quote_closure(depth, motive),
                    quote(depth, if0),
                    quote(depth, if1),
                    term,
                )
            case v.EmptyElimF(motive):
                term = t.EmptyElim(quote_closure(depth, motive), term)
            case _:
                raise KernelBug("bad spine frame")
    return term


def normalize(glob, env: tuple, term: t.Term) -> t.Term:
    return quote(len(env), evaluate(glob, env, term))
