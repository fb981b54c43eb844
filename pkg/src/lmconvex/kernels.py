"""Hot enumeration kernels.

Every kernel exists in two semantically identical forms: a plain-loop
implementation compiled with ``numba.njit`` and a vectorized numpy
implementation.  ``backend.backend_name()`` decides which one a call uses;
benchmarks and tests can address ``<kernel>.numpy`` / ``<kernel>.numba``
directly.

Conventions shared by all kernels:

* lattices are integer-indexed; ``leq``/``meet``/``join`` are dense tables;
* an enumerated function space (all maps from a k-point carrier into an
  n-element value lattice) is described by its value matrix ``vm`` of shape
  (S, k) together with radix ``powers`` (S = n**k, code = sum vm[t]*powers[t]);
* subsets of a small ground set are bitmasks.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from . import backend


class Kernel:
    """Dispatching wrapper holding both implementations of one kernel."""

    def __init__(self, name: str, numpy_impl: Callable, loop_impl: Callable):
        self.name = name
        self.numpy = numpy_impl
        self._loops = loop_impl
        self._compiled = None

    @property
    def numba(self) -> Callable:
        if self._compiled is None:
            from numba import njit

            self._compiled = njit(cache=True)(self._loops)
        return self._compiled

    @property
    def python_loops(self) -> Callable:
        """Uncompiled loop form (slow; used for cross-checks)."""
        return self._loops

    def __call__(self, *args):
        if backend.backend_name() == "numba":
            return self.numba(*args)
        return self.numpy(*args)


# ---------------------------------------------------------------------------
# completely-below relations, quantified over every subset of the lattice


def _wedge_oracle_loops(leq, meet_table, join_table, bottom, top):
    n = leq.shape[0]
    nsub = 1 << n
    join_of = np.empty(nsub, np.int64)
    meet_of = np.empty(nsub, np.int64)
    join_of[0] = bottom
    meet_of[0] = top
    for m in range(1, nsub):
        low = 0
        while (m >> low) & 1 == 0:
            low += 1
        rest = m & (m - 1)
        join_of[m] = join_table[join_of[rest], low]
        meet_of[m] = meet_table[meet_of[rest], low]
    up = np.zeros(n, np.int64)
    down = np.zeros(n, np.int64)
    for a in range(n):
        for x in range(n):
            if leq[a, x]:
                up[a] |= 1 << x
            if leq[x, a]:
                down[a] |= 1 << x
    wedge = np.ones((n, n), np.bool_)
    opwedge = np.ones((n, n), np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for m in range(nsub):
                if leq[b, join_of[m]] and (m & up[a]) == 0:
                    ok = False
                    break
            wedge[a, b] = ok
    for b in range(n):
        for a in range(n):
            ok = True
            for m in range(nsub):
                if leq[meet_of[m], a] and (m & down[b]) == 0:
                    ok = False
                    break
            opwedge[a, b] = ok
    return wedge, opwedge


def _wedge_oracle_numpy(leq, meet_table, join_table, bottom, top):
    n = leq.shape[0]
    nsub = 1 << n
    masks = np.arange(nsub, dtype=np.int64)
    join_of = np.full(nsub, bottom, np.int64)
    meet_of = np.full(nsub, top, np.int64)
    for i in range(n - 1, -1, -1):
        # masks whose lowest set bit is i; the remainder uses higher bits only
        sel = masks[(masks & ((1 << (i + 1)) - 1)) == (1 << i)]
        join_of[sel] = join_table[join_of[sel - (1 << i)], i]
        meet_of[sel] = meet_table[meet_of[sel - (1 << i)], i]
    bits = (np.int64(1) << np.arange(n, dtype=np.int64))
    up = leq @ bits          # up[a] = bitmask of {x : a <= x}
    down = leq.T @ bits      # down[b] = bitmask of {x : x <= b}
    wedge = np.empty((n, n), np.bool_)
    opwedge = np.empty((n, n), np.bool_)
    for a in range(n):
        avoid = (masks & up[a]) == 0
        reach = np.zeros(n, np.bool_)
        reach[join_of[avoid]] = True
        wedge[a] = ~(leq & reach[None, :]).any(axis=1)
    for b in range(n):
        avoid = (masks & down[b]) == 0
        reach = np.zeros(n, np.bool_)
        reach[meet_of[avoid]] = True
        opwedge[:, b] = ~(leq.T & reach[None, :]).any(axis=1)
    return wedge, opwedge


wedge_oracle = Kernel("wedge_oracle", _wedge_oracle_numpy, _wedge_oracle_loops)


# ---------------------------------------------------------------------------
# pairwise codes of pointwise meets/joins over an enumerated function space


def _pair_codes_loops(vm, op_table, powers):
    S, k = vm.shape
    out = np.empty((S, S), np.int64)
    for i in range(S):
        for j in range(S):
            c = 0
            for t in range(k):
                c += op_table[vm[i, t], vm[j, t]] * powers[t]
            out[i, j] = c
    return out


def _pair_codes_numpy(vm, op_table, powers):
    S, k = vm.shape
    out = np.empty((S, S), np.int64)
    # chunk rows so the (chunk, S, k) intermediate stays small
    chunk = max(1, int(4_000_000 // max(1, S * k)))
    for lo in range(0, S, chunk):
        hi = min(S, lo + chunk)
        out[lo:hi] = (op_table[vm[lo:hi, None, :], vm[None, :, :]] * powers).sum(axis=2)
    return out


pair_codes = Kernel("pair_codes", _pair_codes_numpy, _pair_codes_loops)


# ---------------------------------------------------------------------------
# first violation of the binary meet axiom of a degree map


def _first_meet_violation_loops(values, vm, l_meet, powers, m_meet, m_leq):
    S, k = vm.shape
    for i in range(S):
        for j in range(i, S):
            c = 0
            for t in range(k):
                c += l_meet[vm[i, t], vm[j, t]] * powers[t]
            if not m_leq[m_meet[values[i], values[j]], values[c]]:
                return i, j
    return -1, -1


def _first_meet_violation_numpy(values, vm, l_meet, powers, m_meet, m_leq):
    S = vm.shape[0]
    for i in range(S):
        codes = (l_meet[vm[i][None, :], vm[i:]] * powers).sum(axis=1)
        ok = m_leq[m_meet[values[i], values[i:]], values[codes]]
        if not ok.all():
            return i, i + int(np.argmin(ok))
    return -1, -1


first_meet_violation = Kernel(
    "first_meet_violation", _first_meet_violation_numpy, _first_meet_violation_loops
)


# ---------------------------------------------------------------------------
# batched validity (boundary axiom + binary meet axiom) of many degree maps


def _valid_batch_loops(values2d, vm, l_meet, powers, m_meet, m_leq, bottom_code, top_code, m_top):
    N, S = values2d.shape
    k = vm.shape[1]
    mc = np.empty((S, S), np.int64)
    for i in range(S):
        for j in range(S):
            c = 0
            for t in range(k):
                c += l_meet[vm[i, t], vm[j, t]] * powers[t]
            mc[i, j] = c
    ok = np.ones(N, np.bool_)
    for r in range(N):
        v = values2d[r]
        if v[bottom_code] != m_top or v[top_code] != m_top:
            ok[r] = False
            continue
        good = True
        for i in range(S):
            for j in range(i, S):
                if not m_leq[m_meet[v[i], v[j]], v[mc[i, j]]]:
                    good = False
                    break
            if not good:
                break
        ok[r] = good
    return ok


def _valid_batch_numpy(values2d, vm, l_meet, powers, m_meet, m_leq, bottom_code, top_code, m_top):
    S = vm.shape[0]
    mc = _pair_codes_numpy(vm, l_meet, powers)
    ok = (values2d[:, bottom_code] == m_top) & (values2d[:, top_code] == m_top)
    iu, ju = np.triu_indices(S)
    for i, j in zip(iu, ju):
        live = np.nonzero(ok)[0]
        if live.size == 0:
            break
        sub = values2d[live]
        ok[live] = m_leq[m_meet[sub[:, i], sub[:, j]], sub[:, mc[i, j]]]
    return ok


valid_batch = Kernel("valid_batch", _valid_batch_numpy, _valid_batch_loops)


# ---------------------------------------------------------------------------
# least fixpoint of the subbase closure step


def _closure_loops(start, vm, l_meet, powers, m_meet, m_join, bottom_code, top_code, m_top):
    S, k = vm.shape
    cur = start.copy()
    cur[bottom_code] = m_top
    cur[top_code] = m_top
    changed = True
    while changed:
        changed = False
        for i in range(S):
            for j in range(i, S):
                c = 0
                for t in range(k):
                    c += l_meet[vm[i, t], vm[j, t]] * powers[t]
                v = m_meet[cur[i], cur[j]]
                nv = m_join[cur[c], v]
                if nv != cur[c]:
                    cur[c] = nv
                    changed = True
    return cur


def _closure_numpy(start, vm, l_meet, powers, m_meet, m_join, bottom_code, top_code, m_top):
    nM = m_meet.shape[0]
    # joins accumulate as intersections of upper-set bitmasks
    idx = np.arange(nM, dtype=np.int64)
    m_leq = m_join == idx[None, :]
    bits = (np.int64(1) << np.arange(nM, dtype=np.int64))
    upmask = m_leq @ bits
    order = np.argsort(upmask)
    sorted_masks = upmask[order]

    cur = start.copy()
    cur[bottom_code] = m_top
    cur[top_code] = m_top
    while True:
        prev = cur
        acc = upmask[cur].copy()
        for i in range(vm.shape[0]):
            codes = (l_meet[vm[i][None, :], vm] * powers).sum(axis=1)
            contrib = upmask[m_meet[cur[i], cur]]
            np.bitwise_and.at(acc, codes, contrib)
        cur = order[np.searchsorted(sorted_masks, acc)]
        if np.array_equal(cur, prev):
            return cur


closure_fixpoint = Kernel("closure_fixpoint", _closure_numpy, _closure_loops)


# ---------------------------------------------------------------------------
# meet over value-lattice levels of a crisp degree map evaluated at cut sets


def _level_meet_loops(cut_codes, crisp_values, m_meet, m_top):
    S, nL = cut_codes.shape
    out = np.empty(S, np.int64)
    for s in range(S):
        acc = m_top
        for a in range(nL):
            acc = m_meet[acc, crisp_values[cut_codes[s, a]]]
        out[s] = acc
    return out


def _level_meet_numpy(cut_codes, crisp_values, m_meet, m_top):
    S, nL = cut_codes.shape
    acc = np.full(S, m_top, np.int64)
    for a in range(nL):
        acc = m_meet[acc, crisp_values[cut_codes[:, a]]]
    return acc


level_meet = Kernel("level_meet", _level_meet_numpy, _level_meet_loops)


ALL_KERNELS = (
    wedge_oracle,
    pair_codes,
    first_meet_violation,
    valid_batch,
    closure_fixpoint,
    level_meet,
)
