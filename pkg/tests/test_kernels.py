import itertools

import numpy as np
import pytest

from lmconvex import BudgetError, Carrier, FuzzySet, chain, diamond, pentagon
from lmconvex import backend
from lmconvex.kernels import (ALL_KERNELS, closure_fixpoint, first_meet_violation,
                              level_meet, pair_codes, valid_batch, wedge_oracle)
from lmconvex.spaces import crisp_space, fuzzy_space


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(42)


def _space_args():
    carrier = Carrier(("x", "y", "z"))
    lat = chain(3)
    space = fuzzy_space(carrier, lat)
    return space, lat


def test_backend_resolution_respects_the_environment(monkeypatch):
    monkeypatch.setenv(backend.ENV_VAR, "numpy")
    backend.set_backend(None)
    assert backend.backend_name() == "numpy"
    monkeypatch.setenv(backend.ENV_VAR, "bogus")
    backend.set_backend(None)
    with pytest.raises(ValueError):
        backend.backend_name()
    monkeypatch.delenv(backend.ENV_VAR)
    backend.set_backend(None)
    assert backend.backend_name() in ("numba", "numpy")


def test_every_kernel_has_both_variants():
    for kernel in ALL_KERNELS:
        assert callable(kernel.numpy)
        assert callable(kernel.python_loops)


@pytest.mark.parametrize("lat_builder", [lambda: chain(2), lambda: chain(5),
                                         diamond, pentagon])
def test_wedge_oracle_variants_agree(lat_builder):
    lat = lat_builder()
    args = (lat.leq, lat.meet_table, lat.join_table,
            int(lat.bottom_index), int(lat.top_index))
    w_np, ow_np = wedge_oracle.numpy(*args)
    w_nb, ow_nb = wedge_oracle.numba(*args)
    assert np.array_equal(w_np, w_nb)
    assert np.array_equal(ow_np, ow_nb)


def test_pair_codes_variants_agree_and_are_symmetric():
    space, lat = _space_args()
    for table in (lat.meet_table, lat.join_table):
        a = pair_codes.numpy(space.values_matrix, table, space.powers)
        b = pair_codes.numba(space.values_matrix, table, space.powers)
        assert np.array_equal(a, b)
        assert np.array_equal(a, a.T)


def test_violation_and_batch_variants_agree(rng):
    space, lat = _space_args()
    m = diamond()
    args_tail = (space.values_matrix, lat.meet_table, space.powers,
                 m.meet_table, m.leq)
    batch = rng.integers(0, len(m), (300, space.size)).astype(np.int64)
    v_np = valid_batch.numpy(batch, *args_tail, space.bottom_code, space.top_code,
                             int(m.top_index))
    v_nb = valid_batch.numba(batch, *args_tail, space.bottom_code, space.top_code,
                             int(m.top_index))
    assert np.array_equal(v_np, v_nb)
    for row in batch[:60]:
        r_np = tuple(first_meet_violation.numpy(row, *args_tail))
        r_nb = tuple(first_meet_violation.numba(row, *args_tail))
        assert r_np == r_nb


def test_closure_and_level_meet_variants_agree(rng):
    space, lat = _space_args()
    m = diamond()
    for _ in range(40):
        start = rng.integers(0, len(m), space.size).astype(np.int64)
        args = (start, space.values_matrix, lat.meet_table, space.powers,
                m.meet_table, m.join_table, space.bottom_code, space.top_code,
                int(m.top_index))
        assert np.array_equal(closure_fixpoint.numpy(*args), closure_fixpoint.numba(*args))
    cut_codes = rng.integers(0, 8, (space.size, len(lat))).astype(np.int64)
    crisp_values = rng.integers(0, len(m), 8).astype(np.int64)
    assert np.array_equal(
        level_meet.numpy(cut_codes, crisp_values, m.meet_table, int(m.top_index)),
        level_meet.numba(cut_codes, crisp_values, m.meet_table, int(m.top_index)))


def test_wedge_oracle_agrees_with_plain_loops_on_a_small_lattice():
    lat = diamond()
    args = (lat.leq, lat.meet_table, lat.join_table,
            int(lat.bottom_index), int(lat.top_index))
    w_py, ow_py = wedge_oracle.python_loops(*args)
    w_np, ow_np = wedge_oracle.numpy(*args)
    assert np.array_equal(w_py, w_np)
    assert np.array_equal(ow_py, ow_np)


def test_results_are_identical_under_both_backends(two_points):
    from lmconvex import StructureMap, check_lm_fuzzy, generate_from_subbase

    lat, m = chain(2), chain(3)
    space = fuzzy_space(two_points, lat)
    outcomes = []
    for name in ("numpy", "numba") if backend.numba_available() else ("numpy",):
        backend.set_backend(name)
        try:
            row = []
            for combo in itertools.product(range(len(m)), repeat=space.size):
                phi = StructureMap.from_codes(space, m, np.array(combo))
                row.append((check_lm_fuzzy(phi).verdict,
                            tuple(generate_from_subbase(phi).as_codes())))
            outcomes.append(row)
        finally:
            backend.set_backend(None)
    assert all(row == outcomes[0] for row in outcomes)


# -- enumerated spaces ----------------------------------------------------------------


def test_space_codes_round_trip(two_points, chain3):
    space = fuzzy_space(two_points, chain3)
    for code in range(space.size):
        assert space.code(space.element(code)) == code
    cspace = crisp_space(two_points)
    for code in range(cspace.size):
        assert cspace.code(cspace.element(code)) == code


def test_boundary_codes_point_at_the_constant_sets(two_points, chain3):
    space = fuzzy_space(two_points, chain3)
    assert space.element(space.bottom_code) == FuzzySet.constant(two_points, chain3, "0")
    assert space.element(space.top_code) == FuzzySet.constant(two_points, chain3, "2")


def test_boundary_codes_survive_reordered_lattice_elements(two_points):
    from lmconvex import FiniteLattice

    scrambled = FiniteLattice.from_cover_pairs(("mid", "top", "bot"),
                                               [("bot", "mid"), ("mid", "top")])
    space = fuzzy_space(two_points, scrambled)
    assert space.element(space.bottom_code) == FuzzySet.constant(two_points, scrambled, "bot")
    assert space.element(space.top_code) == FuzzySet.constant(two_points, scrambled, "top")


def test_pairwise_tables_respect_the_size_guard():
    carrier = Carrier(tuple(f"p{i}" for i in range(8)))
    space = fuzzy_space(carrier, chain(3))  # 6561 members
    with pytest.raises(BudgetError):
        space.meet_codes()


def test_oracle_guard_rejects_large_lattices():
    from lmconvex.lattice_core import wedge_oracle_matrices

    big = chain(17)
    with pytest.raises(BudgetError):
        wedge_oracle_matrices(big)
