"""Brute-force finite-model oracle.

Types are modeled as finite sets and paths between types as bijections
(the skeletal, 1-truncated model).  Every claim of dimension at most 1
is verified by exhaustive enumeration; dimension-2 claims are out of
this model's reach and are covered only by kernel checking.

Composition is diagrammatic: `compose(p, q)` is "p then q", so the
transport of a loop p along a loop q is the conjugate q⁻¹ · p · q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

DEFAULT_BOUND = 4
MAX_BOUND = 6


@dataclass(frozen=True)
class FinSet:
    """A finite set {0, .., size-1} with a display label."""

    size: int
    label: str = ""

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("FinSet size must be non-negative")

    @property
    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class FinBij:
    """A bijection: `mapping[i]` is the image of element i of `domain`."""

    domain: FinSet
    codomain: FinSet
    mapping: tuple

    def __post_init__(self):
        if self.domain.size != self.codomain.size:
            raise ValueError("bijection endpoints must have equal size")
        if sorted(self.mapping) != list(range(self.domain.size)):
            raise ValueError(f"not a permutation table: {self.mapping}")

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def identity(a: FinSet) -> FinBij:
    return FinBij(a, a, tuple(range(a.size)))


def compose(p: FinBij, q: FinBij) -> FinBij:
    """Diagrammatic composition: first p, then q."""
    if p.codomain != q.domain:
        raise ValueError("composition endpoints do not match")
    return FinBij(p.domain, q.codomain, tuple(q.mapping[x] for x in p.mapping))


def inverse(p: FinBij) -> FinBij:
    table = [0] * p.domain.size
    for x, y in enumerate(p.mapping):
        table[y] = x
    return FinBij(p.codomain, p.domain, tuple(table))


def transport_loop(q: FinBij, p: FinBij) -> FinBij:
    """Transport of the loop p along the loop q in the family x ↦ Id(x, x):
    the conjugate q⁻¹ · p · q."""
    return compose(compose(inverse(q), p), q)


def enumerate_bijections(a: FinSet, b: FinSet, bound: int = DEFAULT_BOUND) -> list[FinBij]:
    """All bijections a → b, duplicate-free, lexicographic by mapping table."""
    _check_bound(bound)
    if a.size > bound or b.size > bound:
        raise ValueError(f"set size exceeds bound {bound}")
    if a.size != b.size:
        return []
    return [FinBij(a, b, perm) for perm in itertools.permutations(range(a.size))]


def automorphisms(a: FinSet, bound: int = DEFAULT_BOUND) -> list[FinBij]:
    return enumerate_bijections(a, a, bound)


def _check_bound(bound: int) -> None:
    if not 0 <= bound <= MAX_BOUND:
        raise ValueError(f"bound {bound} exceeds maximum {MAX_BOUND}")


# --- reporting ---


@dataclass
class OracleReport:
    suite: str
    cases: int = 0
    counterexamples: list[str] = field(default_factory=list)
    ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def record(self, condition: bool, witness: str) -> None:
        self.cases += 1
        if not condition:
            self.counterexamples.append(witness)

    def to_json(self) -> dict:
        out = {
            "name": self.suite,
            "kind": "oracle",
            "status": "accepted" if self.ok else "rejected",
            "ref": "",
            "ms": round(self.ms, 3),
            "cases": self.cases,
        }
        if self.counterexamples:
            out["diagnostic"] = {
                "severity": "error",
                "code": "counterexample",
                "message": "; ".join(self.counterexamples[:5]),
                "span": [0, 0],
            }
        return out


def reports_to_json(reports: list["OracleReport"]) -> dict:
    """Aggregate suite reports in the same shape as a CheckReport."""
    rejected = sum(1 for r in reports if not r.ok)
    return {
        "file": "<oracle>",
        "declarations": [r.to_json() for r in reports],
        "totals": {
            "accepted": len(reports) - rejected,
            "rejected": rejected,
            "ms": round(sum(r.ms for r in reports), 3),
        },
    }


# --- suites ---


def check_enumeration(bound: int = DEFAULT_BOUND) -> OracleReport:
    """Completeness of bijection enumeration: |Bij(A, A)| = |A|!, cross-size
    emptiness, no duplicates, lexicographic order."""
    report = OracleReport("enumeration")
    for n in range(bound + 1):
        a = FinSet(n, f"S{n}")
        bijs = enumerate_bijections(a, a, bound)
        report.record(
            len(bijs) == math.factorial(n), f"|Bij({n},{n})| = {len(bijs)} != {n}!"
        )
        tables = [b.mapping for b in bijs]
        report.record(len(set(tables)) == len(tables), f"duplicate tables at size {n}")
        report.record(tables == sorted(tables), f"non-lexicographic order at size {n}")
        for m in range(bound + 1):
            if m != n:
                other = enumerate_bijections(a, FinSet(m, f"S{m}"), bound)
                report.record(other == [], f"nonempty Bij({n},{m})")
    return report


def check_groupoid_laws(bound: int = DEFAULT_BOUND) -> OracleReport:
    """Associativity, left/right identity, and inverse laws of composition
    over all automorphisms of every set of size ≤ bound."""
    report = OracleReport("groupoid-laws")
    for n in range(bound + 1):
        a = FinSet(n, f"S{n}")
        auts = automorphisms(a, bound)
        ident = identity(a)
        for p in auts:
            report.record(compose(ident, p) == p, f"id·p != p for p={p.mapping}")
            report.record(compose(p, ident) == p, f"p·id != p for p={p.mapping}")
            report.record(
                compose(p, inverse(p)) == ident, f"p·p⁻¹ != id for p={p.mapping}"
            )
            report.record(
                compose(inverse(p), p) == ident, f"p⁻¹·p != id for p={p.mapping}"
            )
        for p, q, r in itertools.product(auts, repeat=3):
            report.record(
                compose(compose(p, q), r) == compose(p, compose(q, r)),
                f"associativity fails at {p.mapping},{q.mapping},{r.mapping}",
            )
    return report


def check_path_container(bound: int = DEFAULT_BOUND) -> OracleReport:
    """The model's path set between sets is, by definition, its bijection
    set: the same container backs both, and composition/inverse of paths
    are composition/inverse of bijections (checked by round-tripping)."""
    report = OracleReport("path-container")
    for n in range(bound + 1):
        a = FinSet(n, f"S{n}")
        b = FinSet(n, f"T{n}")
        paths = enumerate_bijections(a, b, bound)
        bijs = enumerate_bijections(a, b, bound)
        report.record(paths == bijs, f"path/bijection containers differ at size {n}")
        for p in paths:
            report.record(
                inverse(inverse(p)) == p, f"double inverse differs for {p.mapping}"
            )
            report.record(
                compose(p, inverse(p)) == identity(a),
                f"path inverse law fails for {p.mapping}",
            )
    return report


def check_transport_conjugation(bound: int = DEFAULT_BOUND) -> OracleReport:
    """For every set X of size ≤ bound and all automorphisms p, q:
    transport of p along q is the conjugate q⁻¹ · p · q, and the two
    distinguished instances hold: transporting along the identity loop
    leaves p fixed, and p is a fixed point of transport along itself."""
    report = OracleReport("transport-conjugation")
    for n in range(bound + 1):
        x = FinSet(n, f"S{n}")
        auts = automorphisms(x, bound)
        ident = identity(x)
        for p, q in itertools.product(auts, repeat=2):
            conj = compose(compose(inverse(q), p), q)
            report.record(
                transport_loop(q, p) == conj,
                f"transport != conjugation at p={p.mapping}, q={q.mapping}",
            )
        for p in auts:
            report.record(
                transport_loop(ident, p) == p, f"transport along refl moves p={p.mapping}"
            )
            report.record(
                transport_loop(p, p) == p, f"p not fixed by transport along itself: {p.mapping}"
            )
    return report


def two_set() -> FinSet:
    return FinSet(2, "two")


def swap_bij() -> FinBij:
    a = two_set()
    return FinBij(a, a, (1, 0))


def commutation_witness_refl(p: FinBij) -> tuple[FinBij, FinBij]:
    """Model shadow of the commuting-loop witness whose first component is
    the identity loop: (refl-shadow, the loop it commutes with)."""
    return (identity(p.domain), p)


def commutation_witness_self(p: FinBij) -> tuple[FinBij, FinBij]:
    """Model shadow of the commuting-loop witness whose first component is
    the loop itself."""
    return (p, p)


def check_commutation_witnesses() -> OracleReport:
    """The two commuting-loop witnesses at (two-element set, swap): first
    components are the identity and swap, both commute with swap, and
    the two first components are distinct."""
    report = OracleReport("commutation-witnesses")
    p = swap_bij()
    first_refl, _ = commutation_witness_refl(p)
    first_self, _ = commutation_witness_self(p)
    report.record(first_refl == identity(p.domain), "refl-witness first component is not the identity")
    report.record(first_self == p, "self-witness first component is not swap")
    for name, q in (("refl-witness", first_refl), ("self-witness", first_self)):
        report.record(
            compose(p, q) == compose(q, p), f"{name} does not commute with swap"
        )
    report.record(first_refl != first_self, "witness first components coincide")
    return report


# --- Σ/Ω cardinality shadows ---


@dataclass(frozen=True)
class PointedFamilyInstance:
    """A pointed base set with a constant fiber: the dimension-1 shadow of
    a pointed family over a pointed type."""

    name: str
    base: FinSet
    basepoint: int
    fiber: FinSet
    fiberpoint: int


SIGMA_LOOP_INSTANCES = (
    PointedFamilyInstance("two/unit", FinSet(2, "two"), 0, FinSet(1, "unit"), 0),
    PointedFamilyInstance("two/two", FinSet(2, "two"), 0, FinSet(2, "two"), 0),
    PointedFamilyInstance("three/two", FinSet(3, "three"), 0, FinSet(2, "two"), 0),
)


def sigma_loops_direct(inst: PointedFamilyInstance) -> list[tuple]:
    """Loops of the total space at its basepoint, enumerated directly over
    the pairs of the total set.

    In the skeletal model elements of a set are discrete, so a loop of
    (a₀, u₀) is an equality of pairs; the enumeration walks every pair
    and keeps those equal to the basepoint pair.
    """
    basepair = (inst.basepoint, inst.fiberpoint)
    return [
        (a, u)
        for a in inst.base.elements
        for u in inst.fiber.elements
        if (a, u) == basepair
    ]


def sigma_loops_split(inst: PointedFamilyInstance) -> list[tuple]:
    """The split side: pairs of a base loop and a fiber transport equation,
    enumerated componentwise."""
    base_loops = [a for a in inst.base.elements if a == inst.basepoint]
    return [
        (a, u)
        for a in base_loops
        for u in inst.fiber.elements
        if u == inst.fiberpoint  # transport along a base loop is trivial here
    ]


def check_sigma_loop_cardinality(bound: int = DEFAULT_BOUND) -> OracleReport:
    """Both enumerations of the loop space of a pointed total space agree:
    equal cardinality and an explicit matching, for every configured
    instance."""
    report = OracleReport("sigma-loop-cardinality")
    for inst in SIGMA_LOOP_INSTANCES:
        if inst.base.size > bound or inst.fiber.size > bound:
            raise ValueError(f"instance {inst.name} exceeds bound {bound}")
        direct = sigma_loops_direct(inst)
        split = sigma_loops_split(inst)
        report.record(
            len(direct) == len(split),
            f"{inst.name}: cardinalities differ ({len(direct)} vs {len(split)})",
        )
        report.record(
            sorted(direct) == sorted(split),
            f"{inst.name}: no matching between the two enumerations",
        )
    return report


SUITES = {
    "enumeration": check_enumeration,
    "groupoid-laws": check_groupoid_laws,
    "path-container": check_path_container,
    "transport-conjugation": check_transport_conjugation,
    "commutation-witnesses": lambda bound=DEFAULT_BOUND: check_commutation_witnesses(),
    "sigma-loop-cardinality": check_sigma_loop_cardinality,
}


def run_suites(names: list[str] | None = None, bound: int = DEFAULT_BOUND) -> list[OracleReport]:
    """Run the named suites (all by default) in declaration order."""
    import time

    _check_bound(bound)
    selected = list(SUITES) if names is None else names
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    reports = []
    for name in selected:
        start = time.perf_counter()
        report = SUITES[name](bound)
        report.ms = (time.perf_counter() - start) * 1000
        reports.append(report)
    return reports
