"""String builders for emitting surface-syntax terms and declarations.

The corpus is plain text; these helpers keep the emitted terms
well-parenthesized without hand-counting parentheses.
"""

from __future__ import annotations

import re

_SIMPLE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$|^[0-9]+$|^U[0-9]+$")

_HEAD_BREAKERS = ("=>", "->", "*", ",", ":")


def atom(part: str) -> str:
    """Wrap a term so it can stand as an application argument."""
    part = part.strip()
    if _SIMPLE.match(part) or _wrapped(part):
        return part
    return f"({part})"


def _wrapped(part: str) -> bool:
    if not (part.startswith("(") and part.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(part):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return i == len(part) - 1
    return False


def A(head: str, *args: str) -> str:
    """Application: `head arg1 arg2 ...`."""
    head = head.strip()
    if any(b in head for b in _HEAD_BREAKERS) and not _wrapped(head):
        head = f"({head})"
    return " ".join([head] + [atom(a) for a in args])


def lam(*parts: str) -> str:
    """`lam("x", "y", body)` -> `fun x y => body`."""
    *names, body = parts
    return f"fun {' '.join(names)} => {body}"


def pi(binders: str, cod: str) -> str:
    """`pi("(x : A) (y : B)", cod)`; binders already rendered."""
    return f"{binders} -> {cod}"


def arrow(*types: str) -> str:
    return " -> ".join(atom(t) if "->" in t or "*" in t else t for t in types)


def sigma(name: str, fst_ty: str, snd_ty: str) -> str:
    return f"({name} : {fst_ty}) * {snd_ty}"


def times(a: str, b: str) -> str:
    return f"{atom(a)} * {atom(b)}"


def pair(*parts: str) -> str:
    return f"({', '.join(parts)})"


def Id(ty: str, lhs: str, rhs: str) -> str:
    return f"Id {atom(ty)} {atom(lhs)} {atom(rhs)}"


def J(motive: str, base: str, path: str) -> str:
    return f"J {atom(motive)} {atom(base)} {atom(path)}"


def refl(x: str) -> str:
    return f"refl {atom(x)}"


def fst(x: str) -> str:
    return f"fst {atom(x)}"


def snd(x: str) -> str:
    return f"snd {atom(x)}"


class Decl:
    """One surface declaration plus its manifest metadata."""

    def __init__(self, kind: str, name: str, ty: str, body: str | None = None,
                 ref: str = "", comment: str = ""):
        self.kind = kind
        self.name = name
        self.ty = ty
        self.body = body
        self.ref = ref
        self.comment = comment

    def render(self) -> str:
        lines = []
        if self.comment:
            for line in self.comment.splitlines():
                lines.append(f"-- {line}".rstrip())
        if self.ref:
            lines.append(f"--@ {self.ref}")
        if self.kind == "axiom":
            lines.append(f"axiom {self.name} : {self.ty}")
        else:
            lines.append(f"{self.kind} {self.name} : {self.ty}")
            lines.append(f"  := {self.body}")
        return "\n".join(lines)


class HottFile:
    def __init__(self, relpath: str, pragmas: list[str] | None = None,
                 header: str = "", generality: str = ""):
        self.relpath = relpath
        self.pragmas = list(pragmas or [])
        self.header = header
        self.generality = generality
        self.decls: list[Decl] = []

    def d(self, kind: str, name: str, ty: str, body: str | None = None,
          ref: str = "", comment: str = "") -> str:
        self.decls.append(Decl(kind, name, ty, body, ref, comment))
        return name

    def render(self) -> str:
        lines = []
        for line in self.header.splitlines():
            lines.append(f"-- {line}".rstrip())
        if self.generality:
            lines.append(f"-- generality: {self.generality}")
        for p in self.pragmas:
            lines.append(f"--! {p}")
        out = "\n".join(lines)
        for decl in self.decls:
            out += "\n\n" + decl.render()
        return out + "\n"
