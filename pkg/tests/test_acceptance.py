"""Acceptance gate: wall-time budgets for the corpus levels, the oracle
budget, symbol coverage, and the mutation suite (no false accepts)."""

import time

import pytest

from conftest import CorpusRun

from minihott import oracle
from minihott.corpus.manifest import emit_corpus, missing_symbols

PRELUDE_AND_GENERIC = ["prelude/", "generic/"]

LEVEL0_BUDGET_SECONDS = 10.0
LEVEL1_BUDGET_SECONDS = 60.0
LEVEL2_BUDGET_SECONDS = 600.0
ORACLE_BUDGET_SECONDS = 5.0


# --- criterion: each level checks within its budget ---


def test_level0_results_within_budget(corpus_run):
    elapsed = corpus_run.seconds_through(PRELUDE_AND_GENERIC + ["levels/level0/"])
    assert elapsed < LEVEL0_BUDGET_SECONDS, f"level 0 took {elapsed:.1f}s"
    assert corpus_run.status_of("universeZeroNotSet") == "accepted"
    assert corpus_run.status_of("swapPathNontrivial") == "accepted"
    assert corpus_run.status_of("subUniverseNotTrunc1") == "accepted"


def test_level1_results_within_budget(corpus_run):
    elapsed = corpus_run.seconds_through(
        PRELUDE_AND_GENERIC + ["levels/level0/", "levels/level1/"]
    )
    assert elapsed < LEVEL1_BUDGET_SECONDS, f"through level 1: {elapsed:.1f}s"
    # the direct commuting-loops construction, with both witnesses
    assert corpus_run.status_of("commuteChoice") == "accepted"
    assert corpus_run.status_of("reflCommuter") == "accepted"
    assert corpus_run.status_of("selfCommuter") == "accepted"
    assert corpus_run.status_of("universeOneNotGroupoid") == "accepted"
    assert corpus_run.status_of("universeOneNotGroupoidFromLoops") == "accepted"


def test_level2_results_within_budget(corpus_run):
    elapsed = corpus_run.seconds_through([""])  # everything
    assert elapsed < LEVEL2_BUDGET_SECONDS, f"whole corpus took {elapsed:.1f}s"
    assert corpus_run.status_of("universeTwoNotTwoType") == "accepted"
    assert corpus_run.status_of("subUniverseNotTrunc2") == "accepted"
    assert corpus_run.status_of("loopTypeNotTrunc2") == "accepted"
    # the level-2 machinery this route exercises
    for name in ("loopLift2", "loopCell2", "forgetLoops2", "localGlobal1"):
        assert corpus_run.status_of(name) == "accepted"


# --- criterion: oracle exactness and budget ---


def test_oracle_suites_exact_and_fast():
    start = time.perf_counter()
    reports = oracle.run_suites()
    elapsed = time.perf_counter() - start
    assert elapsed < ORACLE_BUDGET_SECONDS
    assert all(r.ok for r in reports)
    by_name = {r.suite: r for r in reports}
    assert set(by_name) == set(oracle.SUITES)
    assert len(oracle.automorphisms(oracle.FinSet(2))) == 2
    assert len(oracle.automorphisms(oracle.FinSet(3))) == 6


# --- criterion: symbol coverage ---


def test_symbol_coverage_complete():
    assert missing_symbols() == []


# --- criterion: the mutation suite has zero false accepts ---


def corpus_sources() -> dict:
    return {f.relpath: f.render() for f in emit_corpus(2)}


def pragma_set(pragma: str) -> set:
    return {f.relpath for f in emit_corpus(2) if pragma in f.pragmas}


def failing_files(run: CorpusRun) -> set:
    return {f.relpath for f, result, _ in run.files if not result.ok}


def first_rejection(run: CorpusRun, relpath_suffix: str) -> str:
    result = run.result_for(relpath_suffix)
    for decl in result.report.declarations:
        if decl.status == "rejected":
            return decl.name
    raise AssertionError(f"no rejection in {relpath_suffix}")


SWAP_BODY = (
    "def swapTwo : Two -> Two\n"
    "  := fun b => twoElim (fun x => Two) one2 zero2 b"
)
SWAP_MUTANT = "def swapTwo : Two -> Two\n  := fun b => b"

SELF_WITNESS_BODY = "def selfCommuter : commuteChoice\n  := fun X p => (p, refl"
SELF_WITNESS_MUTANT = "def selfCommuter : commuteChoice\n  := fun X p => (refl X, refl"


def mutated_run(path: str, old: str, new: str) -> CorpusRun:
    sources = corpus_sources()
    assert old in sources[path], "mutation anchor drifted"
    sources[path] = sources[path].replace(old, new)
    return CorpusRun(sources=sources)


def drop_axiom_run(path: str, axiom_name: str) -> CorpusRun:
    sources = corpus_sources()
    needle = f"axiom {axiom_name} "
    kept = [l for l in sources[path].splitlines() if not l.startswith(needle)]
    assert len(kept) < len(sources[path].splitlines()), "axiom anchor drifted"
    sources[path] = "\n".join(kept) + "\n"
    return CorpusRun(sources=sources)


def test_mutation_swap_to_identity_is_rejected():
    """Replacing the boolean swap by the identity must break exactly the
    proof that its loop is nontrivial; the equivalence structure of the
    mutated map still checks."""
    run = mutated_run("prelude/07-two.hott", SWAP_BODY, SWAP_MUTANT)
    assert run.status_of("swapPathNontrivial") == "rejected"
    assert run.status_of("swapInvol") == "accepted"
    assert run.status_of("swapIsEquiv") == "accepted"
    assert run.result_for("prelude/07-two.hott").ok


def test_mutation_remove_univalence_axioms():
    """Deleting the path-equivalence axioms must break exactly the files
    tagged as depending on them."""
    sources = corpus_sources()
    path = "prelude/06-univalence.hott"
    kept = [
        l for l in sources[path].splitlines() if not l.startswith("axiom univalence")
    ]
    assert len(kept) == len(sources[path].splitlines()) - 4
    sources[path] = "\n".join(kept) + "\n"
    run = CorpusRun(sources=sources)
    assert failing_files(run) == pragma_set("requires-ua")


def test_mutation_remove_function_extensionality_axiom():
    run = drop_axiom_run("prelude/05-funext.hott", "happlyIsEquiv")
    assert failing_files(run) == pragma_set("requires-funext")


def test_mutation_degenerate_commutation_witness_is_rejected():
    """Collapsing the self-commuting witness's first component to the
    trivial loop is caught: composition with the trivial loop on the
    right does not compute away."""
    run = mutated_run(
        "levels/level1/30-commuting-loops.hott",
        SELF_WITNESS_BODY,
        SELF_WITNESS_MUTANT,
    )
    assert run.status_of("selfCommuter") == "rejected"
    assert first_rejection(run, "30-commuting-loops.hott") == "selfCommuter"
