"""Acceptance gate: every promised law at its stated scale and tolerance.

Each test runs one named check from the property suite, prints a PASS/FAIL
line, and asserts the verdict.  Lattice arithmetic is exact, so every
comparison is equality; the only tolerances are the stated runtime targets.
"""

import pytest

from lmconvex.theorems import (SuiteConfig, check_construction_validity,
                               check_cut_biconditionals, check_cut_identities,
                               check_gallery_soundness, check_hull_lemmas,
                               check_minimal_families, check_subbase_generation,
                               check_translation_laws)

CONFIG = SuiteConfig()


def _gate(result, runtime_target: float | None = None):
    print(result.line())
    assert result.passed, result.detail
    if runtime_target is not None:
        assert result.seconds < runtime_target, (
            f"{result.name} took {result.seconds:.1f}s, target {runtime_target}s")


def test_criterion_1_minimal_family_correctness():
    # closed forms vs the subset-quantified oracle on every downset lattice
    # of posets with up to four points, family identities, union laws
    _gate(check_minimal_families(CONFIG), runtime_target=60.0)


def test_criterion_2_cut_identity_suite():
    # reconstruction and distribution identities for every fuzzy set over up
    # to three points and the stock membership lattices, exact equality
    _gate(check_cut_identities(CONFIG))


def test_criterion_3_cut_validity_biconditionals():
    # validity of a degree map is equivalent to validity of all its lower
    # cuts and of all its upper cuts; exhaustive at one point, ten thousand
    # seeded samples at two points, zero mismatches
    _gate(check_cut_biconditionals(CONFIG))


def test_criterion_4_construction_validity_and_extremality():
    # a thousand seeded instances per construction all pass the axioms;
    # quotient finest and product coarsest verified by full enumeration
    _gate(check_construction_validity(CONFIG))


def test_criterion_5_subbase_fixpoint_matches_definitional_meet():
    # the closure fixpoint equals the pointwise meet of every valid
    # structure above the subbase, for all subbases at two points
    _gate(check_subbase_generation(CONFIG))


def test_criterion_6_translation_adjunction_laws():
    # exact round trip from the crisp side, pointwise domination from the
    # fuzzy side, preservation transfer biconditional, transposition
    _gate(check_translation_laws(CONFIG))


def test_criterion_7_hull_and_directedness_lemmas():
    # restricted hull identity on generated classical convexities; threshold
    # cut families are up-directed on certified membership lattices
    _gate(check_hull_lemmas(CONFIG))


def test_criterion_8_gallery_soundness():
    # every stock generator passes its axiom checker; residuum adjunction
    # exact on the downset corpus
    _gate(check_gallery_soundness(CONFIG))


@pytest.mark.slow
def test_whole_suite_runtime_target():
    import time

    from lmconvex.theorems import run_suite

    start = time.perf_counter()
    results = run_suite(CONFIG)
    elapsed = time.perf_counter() - start
    for r in results:
        print(r.line())
    assert all(r.passed for r in results)
    assert elapsed < 600.0, f"suite took {elapsed:.0f}s, target 600s"
