"""Benchmark the hot kernels under both backends.

Runs each kernel on a representative workload with the numba-compiled loop
form and the vectorized numpy form, and prints a timing table.  The same
selection is available at run time through the LMCONVEX_BACKEND variable.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lmconvex import backend
from lmconvex.catalog import chain, diamond
from lmconvex.fuzzy_sets import Carrier
from lmconvex.kernels import (closure_fixpoint, first_meet_violation, level_meet,
                              pair_codes, valid_batch, wedge_oracle)
from lmconvex.spaces import fuzzy_space


def workloads():
    rng = np.random.default_rng(2024)

    lat12 = chain(12)
    yield ("wedge_oracle 12-chain (4096 subsets)", wedge_oracle,
           (lat12.leq, lat12.meet_table, lat12.join_table,
            int(lat12.bottom_index), int(lat12.top_index)))

    carrier = Carrier(tuple(f"p{i}" for i in range(6)))
    lat = chain(3)
    m = diamond()
    space = fuzzy_space(carrier, lat)  # 729 members
    vm, pw = space.values_matrix, space.powers
    yield ("pair_codes 729x729", pair_codes, (vm, lat.meet_table, pw))

    values = rng.integers(0, len(m), space.size).astype(np.int64)
    values[space.bottom_code] = m.top_index
    values[space.top_code] = m.top_index
    yield ("first_meet_violation 729", first_meet_violation,
           (values, vm, lat.meet_table, pw, m.meet_table, m.leq))

    small = fuzzy_space(Carrier(("a", "b", "c")), lat)  # 27 members
    batch = rng.integers(0, len(m), (20000, small.size)).astype(np.int64)
    yield ("valid_batch 20000x27", valid_batch,
           (batch, small.values_matrix, lat.meet_table, small.powers,
            m.meet_table, m.leq, small.bottom_code, small.top_code, int(m.top_index)))

    start = rng.integers(0, len(m), space.size).astype(np.int64)
    yield ("closure_fixpoint 729", closure_fixpoint,
           (start, vm, lat.meet_table, pw, m.meet_table, m.join_table,
            space.bottom_code, space.top_code, int(m.top_index)))

    cut_codes = rng.integers(0, 64, (space.size, len(lat))).astype(np.int64)
    crisp_values = rng.integers(0, len(m), 64).astype(np.int64)
    yield ("level_meet 729x3", level_meet,
           (cut_codes, crisp_values, m.meet_table, int(m.top_index)))


def time_call(fn, args, repeats: int) -> float:
    fn(*args)  # warm up (and trigger compilation on the numba path)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    have_numba = backend.numba_available()
    print(f"{'kernel':<38} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, kernel, call_args in workloads():
        t_np = time_call(kernel.numpy, call_args, args.repeats)
        if have_numba:
            t_nb = time_call(kernel.numba, call_args, args.repeats)
            ratio = t_np / t_nb if t_nb > 0 else float("inf")
            print(f"{name:<38} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms {ratio:>7.1f}x")
        else:
            print(f"{name:<38} {t_np * 1e3:>8.2f}ms {'n/a':>10} {'':>8}")


if __name__ == "__main__":
    main()
