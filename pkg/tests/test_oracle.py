"""Finite-model oracle: exact counts, law suites, determinism, and the
corrupted-operation fixture that proves the suites can fail."""

import json
import math
import time

import pytest

from minihott import oracle


# --- exact values ---


def test_bijection_counts_are_factorials():
    for n in range(5):
        a = oracle.FinSet(n, f"S{n}")
        bijs = oracle.enumerate_bijections(a, a, bound=5)
        assert len(bijs) == math.factorial(n)


def test_two_element_set_has_exactly_two_automorphisms():
    auts = oracle.automorphisms(oracle.FinSet(2, "two"))
    assert [b.mapping for b in auts] == [(0, 1), (1, 0)]


def test_three_element_set_has_exactly_six_automorphisms():
    auts = oracle.automorphisms(oracle.FinSet(3, "three"))
    assert len(auts) == 6
    assert len({b.mapping for b in auts}) == 6


def test_cross_size_bijection_sets_are_empty():
    assert oracle.enumerate_bijections(oracle.FinSet(2), oracle.FinSet(3)) == []


def test_composition_is_diagrammatic():
    a = oracle.FinSet(3)
    p = oracle.FinBij(a, a, (1, 2, 0))
    q = oracle.FinBij(a, a, (1, 0, 2))
    # "p then q": x ↦ q(p(x))
    assert oracle.compose(p, q).mapping == tuple(q(p(x)) for x in range(3))


def test_transport_is_conjugation_with_distinguished_instances():
    x = oracle.FinSet(3)
    auts = oracle.automorphisms(x)
    ident = oracle.identity(x)
    for p in auts:
        assert oracle.transport_loop(ident, p) == p
        assert oracle.transport_loop(p, p) == p
    for p in auts:
        for q in auts:
            expected = oracle.compose(oracle.compose(oracle.inverse(q), p), q)
            assert oracle.transport_loop(q, p) == expected


def test_commutation_witnesses_are_distinct_and_commute():
    report = oracle.check_commutation_witnesses()
    assert report.ok, report.counterexamples
    swap = oracle.swap_bij()
    refl_first, _ = oracle.commutation_witness_refl(swap)
    self_first, _ = oracle.commutation_witness_self(swap)
    assert refl_first == oracle.identity(swap.domain)
    assert self_first == swap
    assert refl_first != self_first


def test_sigma_loop_shadows_agree_on_every_instance():
    for inst in oracle.SIGMA_LOOP_INSTANCES:
        direct = oracle.sigma_loops_direct(inst)
        split = oracle.sigma_loops_split(inst)
        assert len(direct) == len(split) == 1
        assert direct == split == [(inst.basepoint, inst.fiberpoint)]


# --- full suites ---


def test_all_suites_pass_within_budget():
    start = time.perf_counter()
    reports = oracle.run_suites()
    elapsed = time.perf_counter() - start
    assert all(r.ok for r in reports), [
        (r.suite, r.counterexamples) for r in reports if not r.ok
    ]
    assert [r.suite for r in reports] == list(oracle.SUITES)
    assert all(r.cases > 0 for r in reports)
    assert elapsed < 5.0


def test_suite_reports_are_deterministic_modulo_timing():
    def fingerprint():
        payload = oracle.reports_to_json(oracle.run_suites())
        payload["totals"].pop("ms")
        for item in payload["declarations"]:
            item.pop("ms")
        return json.dumps(payload, sort_keys=True)

    assert len({fingerprint() for _ in range(3)}) == 1


def test_report_json_shape():
    payload = oracle.reports_to_json(oracle.run_suites(["enumeration"]))
    assert payload["file"] == "<oracle>"
    assert payload["totals"]["rejected"] == 0
    [decl] = payload["declarations"]
    assert decl["kind"] == "oracle"
    assert decl["status"] == "accepted"
    assert decl["cases"] > 0


# --- the corrupted-operation fixture ---


def test_corrupted_composition_is_caught(monkeypatch):
    """Replacing composition with a variant that drops the first factor
    must produce counterexamples naming the offending tables."""

    def broken(p, q):
        return oracle.FinBij(p.domain, q.codomain, q.mapping)

    monkeypatch.setattr(oracle, "compose", broken)
    report = oracle.check_groupoid_laws(bound=3)
    assert not report.ok
    assert any("p·id != p" in c for c in report.counterexamples)
    # the witness pinpoints a concrete permutation table
    assert any("(" in c and ")" in c for c in report.counterexamples)


def test_corrupted_inverse_is_caught(monkeypatch):
    monkeypatch.setattr(oracle, "inverse", lambda p: p)
    report = oracle.check_groupoid_laws(bound=3)
    assert not report.ok


# --- bounds and errors ---


def test_bound_is_enforced():
    with pytest.raises(ValueError):
        oracle.enumerate_bijections(oracle.FinSet(5), oracle.FinSet(5), bound=4)
    with pytest.raises(ValueError):
        oracle.run_suites(bound=oracle.MAX_BOUND + 1)


def test_unknown_suite_is_an_error():
    with pytest.raises(KeyError):
        oracle.run_suites(["no-such-suite"])


def test_invalid_permutation_table_rejected():
    a = oracle.FinSet(2)
    with pytest.raises(ValueError):
        oracle.FinBij(a, a, (0, 0))
    with pytest.raises(ValueError):
        oracle.FinBij(a, oracle.FinSet(3), (0, 1))
