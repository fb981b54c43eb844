import itertools
import random

import numpy as np
import pytest

from lmconvex import (Carrier, FuzzySet, LConvexity, PreconditionError, StructureMap,
                      chain, check_classical, check_l_convexity, check_lm_fuzzy,
                      check_m_fuzzifying, cut_lower_structure, cut_upper_structure,
                      diamond, fs_meet, is_coarser, meet_structures,
                      structure_from_lower_cuts, structure_from_upper_cuts)
from lmconvex.spaces import crisp_space, fuzzy_space
from lmconvex.theorems import enumerate_structures, enumerate_valid_structures


# -- classical convexity -------------------------------------------------------


def test_the_indiscrete_collection_is_a_convexity(three_points):
    assert check_classical([set(), {"x", "y", "z"}], three_points).verdict


def test_downsets_of_a_poset_form_a_convexity(three_points):
    # downsets of x < y < z
    downsets = [set(), {"x"}, {"x", "y"}, {"x", "y", "z"}]
    assert check_classical(downsets, three_points).verdict


def test_missing_empty_set_is_a_boundary_violation(three_points):
    cert = check_classical([{"x"}, {"y"}, {"x", "y", "z"}], three_points)
    assert not cert.verdict
    assert any(v.axiom == "C1" for v in cert.violations)


def test_missing_intersection_is_reported_with_the_pair(three_points):
    cert = check_classical([set(), {"x", "y"}, {"y", "z"}, {"x", "y", "z"}], three_points)
    assert not cert.verdict
    v = next(v for v in cert.violations if v.axiom == "C2")
    assert set(map(tuple, v.witness)) == {("x", "y"), ("y", "z")}


# -- collection-style fuzzy convexity -------------------------------------------


def test_boundary_pair_is_an_l_convexity(two_points, chain3):
    members = [FuzzySet.constant(two_points, chain3, "0"),
               FuzzySet.constant(two_points, chain3, "2")]
    assert check_l_convexity(members).verdict


def test_closure_repairs_a_random_family(two_points, chain3):
    rng = random.Random(5)
    space = fuzzy_space(two_points, chain3)
    members = [space.element(rng.randrange(space.size)) for _ in range(4)]
    closed = LConvexity.closure(members, two_points, chain3)
    assert check_l_convexity(closed.members).verdict


def test_deleting_a_meet_produces_a_witnessed_violation(two_points, chain3):
    a = FuzzySet.from_mapping(two_points, chain3, {"x": "2", "y": "0"})
    b = FuzzySet.from_mapping(two_points, chain3, {"x": "0", "y": "2"})
    family = LConvexity.closure([a, b], two_points, chain3).members
    met = fs_meet(a, b)
    assert met in family and met not in (a, b)
    broken = family - {met}
    cert = check_l_convexity(broken)
    assert not cert.verdict
    v = next(v for v in cert.violations if v.axiom == "LC2")
    assert fs_meet(*v.witness) not in broken


def test_l_convexity_create_rejects_bad_families(two_points, chain3):
    with pytest.raises(PreconditionError):
        LConvexity.create([FuzzySet.constant(two_points, chain3, "1")])


# -- degree-map axioms ------------------------------------------------------------


def test_constant_top_maps_are_valid_in_both_domains(two_points, chain3, boolean_square):
    fuzzy = StructureMap.indiscrete("fuzzy", two_points, chain3, boolean_square)
    crisp = StructureMap.indiscrete("crisp", two_points, None, boolean_square)
    assert check_lm_fuzzy(fuzzy).verdict
    assert check_m_fuzzifying(crisp).verdict


def test_lowering_one_meet_value_is_caught_with_a_witness(two_points, chain3):
    l = m = chain3
    a = FuzzySet.from_mapping(two_points, l, {"x": "2", "y": "1"})
    b = FuzzySet.from_mapping(two_points, l, {"x": "1", "y": "2"})
    met = fs_meet(a, b)
    assert met == FuzzySet.constant(two_points, l, "1")
    base = {FuzzySet.constant(two_points, l, "0"): "2",
            FuzzySet.constant(two_points, l, "2"): "2",
            a: "2", b: "2", met: "2"}
    good = StructureMap("fuzzy", two_points, l, m, base)
    assert check_lm_fuzzy(good).verdict
    perturbed = StructureMap("fuzzy", two_points, l, m, {**base, met: "0"})
    cert = check_lm_fuzzy(perturbed)
    assert not cert.verdict
    witness = next(v for v in cert.violations if v.axiom == "LMC2").witness
    w_meet = fs_meet(*witness)
    assert not m.leq_holds(m.meet(perturbed.value(witness[0]), perturbed.value(witness[1])),
                           perturbed.value(w_meet))


def test_boundary_violations_name_the_boundary_sets(two_points, chain2, chain3):
    structure = StructureMap("fuzzy", two_points, chain2, chain3, {})
    cert = check_lm_fuzzy(structure)
    tags = [v.axiom for v in cert.violations]
    assert tags.count("LMC1") == 2


def test_chain_axiom_never_fires_at_finite_scale(two_points, chain2, chain3):
    # every degree map, valid or not, satisfies the chain axiom because a
    # finite chain of sets contains its own join
    space = fuzzy_space(two_points, chain2)
    for combo in itertools.product(range(len(chain3)), repeat=space.size):
        structure = StructureMap.from_codes(space, chain3, np.array(combo))
        cert = check_lm_fuzzy(structure, exhaustive_families=True, max_family=3)
        assert all(v.axiom != "LMC3" for v in cert.violations)
        assert all(v.axiom != "MYC3" for v in cert.violations)


def test_exhaustive_family_oracle_agrees_with_pairwise_reduction(two_points, chain2):
    m = diamond()
    space = fuzzy_space(two_points, chain2)
    for combo in itertools.product(range(len(m)), repeat=space.size):
        structure = StructureMap.from_codes(space, m, np.array(combo))
        assert (check_lm_fuzzy(structure).verdict
                == check_lm_fuzzy(structure, exhaustive_families=True).verdict)


# -- special-case collapses ----------------------------------------------------------


def test_two_valued_membership_collapses_to_the_crisp_checker(two_points, chain3):
    l = chain(2)
    fspace = fuzzy_space(two_points, l)
    cspace = crisp_space(two_points)
    for fuzzy in enumerate_structures("fuzzy", two_points, l, chain3):
        codes = fuzzy.as_codes()
        entries = {}
        for code in range(cspace.size):
            subset = cspace.element(code)
            entries[subset] = chain3.elements[
                codes[fspace.code(FuzzySet.characteristic(two_points, l, subset))]]
        crisp = StructureMap("crisp", two_points, None, chain3, entries)
        assert check_lm_fuzzy(fuzzy).verdict == check_m_fuzzifying(crisp).verdict


def test_two_valued_degrees_collapse_to_the_membership_collection(two_points, chain3):
    m = chain(2)
    for fuzzy in enumerate_structures("fuzzy", two_points, chain3, m):
        top_preimage = [s for s in fuzzy_space(two_points, chain3).elements()
                        if fuzzy.value(s) == "1"]
        assert check_lm_fuzzy(fuzzy).verdict == check_l_convexity(top_preimage).verdict


# -- cuts of degree maps ----------------------------------------------------------------


def test_cuts_of_the_indiscrete_map_are_the_whole_space(two_points, chain2, chain3):
    structure = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    space = fuzzy_space(two_points, chain2)
    for level in ("1", "2"):
        assert len(cut_lower_structure(structure, level)) == space.size


def test_top_cut_of_a_valid_structure_is_an_l_convexity(two_points, chain2, chain3):
    for structure in enumerate_valid_structures("fuzzy", two_points, chain2, chain3):
        cut = cut_lower_structure(structure, "2")
        assert check_l_convexity(cut).verdict


def test_bottom_level_is_rejected_for_lower_cuts(two_points, chain2, chain3):
    structure = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    with pytest.raises(PreconditionError):
        cut_lower_structure(structure, "0")


def test_chain_upper_cuts_match_the_successor_description(two_points, chain2, chain3):
    # in a chain, the maximal family of a value v is the upset of v minus the
    # top, so the upper cut at a collects degrees strictly above a plus top
    for structure in enumerate_structures("fuzzy", two_points, chain2, chain3):
        for level_idx, level in enumerate(chain3.elements):
            expected = set()
            for s in fuzzy_space(two_points, chain2).elements():
                v = structure.value(s)
                if v == "2" or chain3.index(v) > level_idx:
                    expected.add(s)
            assert cut_upper_structure(structure, level) == expected


def test_cut_level_inclusions_follow_the_families(two_points, chain2):
    m = diamond()
    for structure in enumerate_valid_structures("fuzzy", two_points, chain2, m):
        for b in m.elements:
            if b == m.bottom:
                continue
            for a in m.beta(b).members:
                if a == m.bottom:
                    continue
                assert cut_lower_structure(structure, b) <= cut_lower_structure(structure, a)
        alpha_bottom = m.alpha(m.bottom).members
        for a in alpha_bottom:
            for b in m.alpha(a).members:
                assert cut_upper_structure(structure, b) <= cut_upper_structure(structure, a)


# -- order and meets ---------------------------------------------------------------------


def test_meet_with_the_indiscrete_map_changes_nothing(two_points, chain2, chain3):
    structure = next(iter(enumerate_valid_structures("fuzzy", two_points, chain2, chain3)))
    top = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    assert meet_structures([structure, top]) == structure


def test_meet_of_valid_structures_is_valid_and_is_the_infimum(two_points, chain2):
    m = chain(3)
    valid = enumerate_valid_structures("fuzzy", two_points, chain2, m)
    for c, d in itertools.product(valid[:6], valid[:6]):
        met = meet_structures([c, d])
        assert check_lm_fuzzy(met).verdict
        assert is_coarser(met, c) and is_coarser(met, d)
        for lower in valid:
            if is_coarser(lower, c) and is_coarser(lower, d):
                assert is_coarser(lower, met)


# -- rebuilding from cuts ----------------------------------------------------------------


def test_constant_cut_family_reconstructs_the_boundary_structure(two_points, chain2, chain3):
    boundary = [FuzzySet.constant(two_points, chain2, "0"),
                FuzzySet.constant(two_points, chain2, "1")]
    cuts = {"1": boundary, "2": boundary}
    rebuilt = structure_from_lower_cuts(chain3, cuts)
    for s in fuzzy_space(two_points, chain2).elements():
        expected = "2" if s in boundary else "0"
        assert rebuilt.value(s) == expected


def test_lower_cut_round_trip(two_points, chain2, chain3):
    for structure in enumerate_valid_structures("fuzzy", two_points, chain2, chain3):
        cuts = {level: cut_lower_structure(structure, level)
                for level in chain3.elements if level != "0"}
        rebuilt = structure_from_lower_cuts(chain3, cuts)
        assert rebuilt == structure
        for level in cuts:
            assert cut_lower_structure(rebuilt, level) == frozenset(cuts[level])


def test_upper_cut_round_trip(two_points, chain2, chain3):
    # the maximal family of any degree sits inside that of bottom, so the
    # upper cut family determines the map completely
    alpha_bottom = sorted(chain3.alpha("0").members)
    for structure in enumerate_valid_structures("fuzzy", two_points, chain2, chain3):
        cuts = {level: cut_upper_structure(structure, level) for level in alpha_bottom}
        rebuilt = structure_from_upper_cuts(chain3, cuts)
        assert rebuilt == structure
        for level in cuts:
            assert cut_upper_structure(rebuilt, level) == frozenset(cuts[level])


def test_incompatible_cut_family_is_rejected_with_the_level(two_points, chain2, chain3):
    structure = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    cuts = {level: set(cut_lower_structure(structure, level))
            for level in chain3.elements if level != "0"}
    # dropping one non-boundary set from a lower level leaves the higher
    # level claiming a member outside the intersection over its minimal family
    victim = next(s for s in cuts["1"]
                  if s not in (FuzzySet.constant(two_points, chain2, "0"),
                               FuzzySet.constant(two_points, chain2, "1")))
    cuts["1"] = LConvexity.closure(cuts["1"] - {victim}, two_points, chain2).members
    assert victim not in cuts["1"] and victim in cuts["2"]
    with pytest.raises(PreconditionError) as err:
        structure_from_lower_cuts(chain3, cuts)
    assert "level" in str(err.value)


# -- validity biconditionals ------------------------------------------------------------


def test_validity_is_equivalent_to_cut_validity_at_one_point(chain2):
    x = Carrier(("x",))
    m = chain(3)
    for structure in enumerate_structures("fuzzy", x, chain2, m):
        direct = check_lm_fuzzy(structure).verdict
        lower = all(check_l_convexity(cut_lower_structure(structure, a)).verdict
                    for a in m.elements if a != m.bottom)
        upper = all(check_l_convexity(cut_upper_structure(structure, a)).verdict
                    for a in sorted(m.alpha(m.bottom).members))
        assert direct == lower == upper


# -- representation edge cases -----------------------------------------------------


def test_structure_equality_is_extensional_across_defaults(two_points, chain2, chain3):
    space = fuzzy_space(two_points, chain2)
    top_everywhere = {space.element(i): "2" for i in range(space.size)}
    a = StructureMap("fuzzy", two_points, chain2, chain3, top_everywhere, default="0")
    b = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    assert a == b and hash(a) == hash(b)


def test_meet_of_an_empty_family_is_rejected():
    with pytest.raises(PreconditionError):
        meet_structures([])


def test_order_comparison_requires_matching_signatures(two_points, chain2, chain3):
    a = StructureMap.indiscrete("fuzzy", two_points, chain2, chain3)
    b = StructureMap.indiscrete("crisp", two_points, None, chain3)
    with pytest.raises(PreconditionError):
        is_coarser(a, b)


def test_cut_round_trips_hold_over_a_non_chain_value_lattice(two_points, chain2):
    m = diamond()
    alpha_bottom = sorted(m.alpha(m.bottom).members)
    for structure in enumerate_valid_structures("fuzzy", two_points, chain2, m):
        lower = {lvl: cut_lower_structure(structure, lvl)
                 for lvl in m.elements if lvl != m.bottom}
        assert structure_from_lower_cuts(m, lower) == structure
        upper = {lvl: cut_upper_structure(structure, lvl) for lvl in alpha_bottom}
        assert structure_from_upper_cuts(m, upper) == structure
