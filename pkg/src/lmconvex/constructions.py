"""Ways of building new degree structures from old ones.

Covers the backward transport of a structure along a surjection, quotient
structures, substructures on a subset of the carrier, hull operators of
classical convexities, generation of the least structure above a subbase,
and finite products.

Subbase generation runs as a least fixpoint of the monotone closure step
T(C)(A) = subbase(A) v [top on the boundary] v join over pairs with
pointwise meet A of C(B1) /\\ C(B2), rather than by the defining meet over
all finer structures, whose candidate count |M|**|domain| is astronomical;
an exhaustive enumeration oracle stays available for small instances.
"""

from __future__ import annotations

from itertools import product as iter_product
from typing import Collection, Iterable

import numpy as np

from . import kernels
from .convex_structures import StructureMap, check_classical
from .errors import BudgetError, PreconditionError
from .fuzzy_sets import Carrier, SpaceMap
from .spaces import EnumeratedSpace, space_for

PRODUCT_BUDGET_DEFAULT = 3 ** 9


# ---------------------------------------------------------------------------
# transport along carrier maps


def preimage_structure(target: StructureMap, f: SpaceMap) -> StructureMap:
    """Pull a fuzzy-domain structure back along a surjection.

    Each fuzzy set on the domain receives the join of the degrees of its
    witnesses on the codomain (sets whose backward image it is); fuzzy sets
    that are not backward images receive bottom.
    """
    _require_fuzzy(target)
    if f.codomain != target.carrier:
        raise PreconditionError("map codomain does not match the structure carrier")
    if not f.is_surjective:
        raise PreconditionError("backward transport requires a surjective map")
    src_space = space_for("fuzzy", f.domain, target.lattice)
    tgt_space = target.space()
    m = target.m
    codes = target.as_codes()
    fiber_cols = [f.codomain.index(y) for y in f.graph]
    pulled = tgt_space.values_matrix[:, fiber_cols]
    pulled_codes = pulled @ src_space.powers
    out = np.full(src_space.size, m.bottom_index, dtype=np.int64)
    for b_code in range(tgt_space.size):
        a_code = pulled_codes[b_code]
        out[a_code] = m.join_table[out[a_code], codes[b_code]]
    return StructureMap.from_codes(src_space, m, out)


def quotient_structure(source: StructureMap, f: SpaceMap) -> StructureMap:
    """Push a fuzzy-domain structure forward along a surjection.

    The degree of a codomain fuzzy set is the degree of its backward image;
    this is the finest structure making the map degree-preserving.
    """
    _require_fuzzy(source)
    if f.domain != source.carrier:
        raise PreconditionError("map domain does not match the structure carrier")
    if not f.is_surjective:
        raise PreconditionError("quotient structures require a surjective map")
    src_space = source.space()
    tgt_space = space_for("fuzzy", f.codomain, source.lattice)
    codes = source.as_codes()
    fiber_cols = [f.codomain.index(y) for y in f.graph]
    pulled_codes = tgt_space.values_matrix[:, fiber_cols] @ src_space.powers
    return StructureMap.from_codes(tgt_space, source.m, codes[pulled_codes])


def quotient_by_partition(source: StructureMap,
                          blocks: Collection[Collection[str]]) -> tuple[SpaceMap, StructureMap]:
    """Quotient along the projection onto equivalence classes.

    Each class is named after its least point.  Returns the projection and
    the induced structure on the class carrier.
    """
    _require_fuzzy(source)
    seen: set[str] = set()
    named: dict[str, frozenset[str]] = {}
    for block in blocks:
        s = source.carrier.subset(block)
        if not s:
            raise PreconditionError("partition blocks must be nonempty")
        if s & seen:
            raise PreconditionError("partition blocks overlap")
        seen |= s
        named[min(s)] = s
    if seen != set(source.carrier.points):
        raise PreconditionError("partition does not cover the carrier")
    class_carrier = Carrier(tuple(name for name in sorted(named)))
    graph = tuple(next(name for name, s in named.items() if x in s)
                  for x in source.carrier.points)
    projection = SpaceMap(source.carrier, class_carrier, graph)
    return projection, quotient_structure(source, projection)


def substructure(source: StructureMap, subset: Iterable[str]) -> StructureMap:
    """Restrict a fuzzy-domain structure to a nonempty part of the carrier.

    A fuzzy set on the part receives the join of the degrees of all its
    extensions to the full carrier.
    """
    _require_fuzzy(source)
    keep = source.carrier.subset(subset)
    if not keep:
        raise PreconditionError("substructures require a nonempty carrier subset")
    sub_carrier = Carrier(tuple(p for p in source.carrier.points if p in keep))
    sub_space = space_for("fuzzy", sub_carrier, source.lattice)
    src_space = source.space()
    m = source.m
    codes = source.as_codes()
    cols = [source.carrier.index(p) for p in sub_carrier.points]
    restricted = src_space.values_matrix[:, cols] @ sub_space.powers
    out = np.full(sub_space.size, m.bottom_index, dtype=np.int64)
    for b_code in range(src_space.size):
        a_code = restricted[b_code]
        out[a_code] = m.join_table[out[a_code], codes[b_code]]
    return StructureMap.from_codes(sub_space, m, out)


def _require_fuzzy(structure: StructureMap) -> None:
    if structure.kind != "fuzzy":
        raise PreconditionError("this construction expects a fuzzy-domain structure")


# ---------------------------------------------------------------------------
# hulls of classical convexities


class HullOperator:
    """Smallest-convex-superset operator of a classical convexity, memoized."""

    def __init__(self, convexity: Collection[Iterable[str]], carrier: Carrier):
        cert = check_classical(convexity, carrier)
        if not cert.verdict:
            raise PreconditionError(
                "not a classical convexity: "
                + "; ".join(v.describe() for v in cert.violations))
        self.carrier = carrier
        self.convexity = frozenset(carrier.subset(s) for s in convexity)
        self._memo: dict[frozenset[str], frozenset[str]] = {}

    def __call__(self, subset: Iterable[str]) -> frozenset[str]:
        s = self.carrier.subset(subset)
        if s not in self._memo:
            # intersection of all convex supersets; the full carrier qualifies
            acc = frozenset(self.carrier.points)
            for member in self.convexity:
                if s <= member:
                    acc &= member
            self._memo[s] = acc
        return self._memo[s]


def hull(convexity: Collection[Iterable[str]], carrier: Carrier,
         subset: Iterable[str]) -> frozenset[str]:
    return HullOperator(convexity, carrier)(subset)


def restricted_hull_identity(convexity: Collection[Iterable[str]], carrier: Carrier,
                             part: Iterable[str], member: Iterable[str]) -> bool:
    """Whether hulling a member's trace on a part does not grow the trace.

    For a convex member A and any part Y, the hull of A & Y meets Y exactly
    in A & Y.
    """
    co = HullOperator(convexity, carrier)
    a = carrier.subset(member)
    if a not in co.convexity:
        raise PreconditionError("the identity is stated for convex members only")
    y = carrier.subset(part)
    return co(a & y) & y == a & y


# ---------------------------------------------------------------------------
# subbase generation


def generate_from_subbase(subbase: StructureMap) -> StructureMap:
    """Least valid degree structure dominating an arbitrary degree map.

    Computed as the least fixpoint of the closure step; values only ascend
    in a finite lattice, so the sweep terminates.  Works for both crisp and
    fuzzy domains.
    """
    space = subbase.space()
    m = subbase.m
    out = kernels.closure_fixpoint(
        subbase.as_codes(), space.values_matrix, space.value_lattice.meet_table,
        space.powers, m.meet_table, m.join_table,
        space.bottom_code, space.top_code, m.top_index)
    return StructureMap.from_codes(space, m, out)


def generate_from_subbase_bruteforce(subbase: StructureMap,
                                     cap: int = 10 ** 6) -> StructureMap:
    """Pointwise meet of every valid structure above the subbase.

    Enumerates all |M|**size candidate degree maps; refuses beyond the cap.
    Exists as the independent arbiter for the fixpoint implementation.
    """
    space = subbase.space()
    m = subbase.m
    n_m, size = len(m), space.size
    total = n_m ** size
    if total > cap:
        raise BudgetError(
            f"enumeration of {n_m}**{size} candidate maps is over the cap",
            requested=total, budget=cap)
    base = subbase.as_codes()
    acc = np.full(size, m.top_index, dtype=np.int64)
    found = False
    batch = []
    for combo in iter_product(range(n_m), repeat=size):
        batch.append(combo)
        if len(batch) == 4096:
            found |= _fold_valid_above(np.array(batch, dtype=np.int64), base, space, m, acc)
            batch = []
    if batch:
        found |= _fold_valid_above(np.array(batch, dtype=np.int64), base, space, m, acc)
    assert found, "the constant-top structure always qualifies"
    return StructureMap.from_codes(space, m, acc)


def _fold_valid_above(cands: np.ndarray, base: np.ndarray, space: EnumeratedSpace,
                      m, acc: np.ndarray) -> bool:
    """Meet all valid candidates dominating the base into the accumulator."""
    above = m.leq[base[None, :], cands].all(axis=1)
    if not above.any():
        return False
    cands = cands[above]
    ok = kernels.valid_batch(
        cands, space.values_matrix, space.value_lattice.meet_table, space.powers,
        m.meet_table, m.leq, space.bottom_code, space.top_code, m.top_index)
    if not ok.any():
        return False
    for row in cands[ok]:
        acc[:] = m.meet_table[acc, row]
    return True


# ---------------------------------------------------------------------------
# products


def product_structure(factors: Collection[tuple[Carrier, StructureMap]] | Collection[StructureMap],
                      budget: int = PRODUCT_BUDGET_DEFAULT
                      ) -> tuple[StructureMap, tuple[SpaceMap, ...]]:
    """Product of finitely many fuzzy-domain structures.

    Builds the subbase that joins, over every factor, the degrees of sets
    pulled back along the projections, then generates the least structure
    above it.  Returns the product structure and the projections; the
    product carrier's points are tuples rendered as "(x,y,...)".
    """
    structures = [s[1] if isinstance(s, tuple) else s for s in factors]
    if not structures:
        raise PreconditionError("products need at least one factor")
    for s in structures:
        _require_fuzzy(s)
    lattice, m = structures[0].lattice, structures[0].m
    for s in structures[1:]:
        if s.lattice != lattice or s.m != m:
            raise PreconditionError("product factors share the membership and value lattices")
    combos = list(iter_product(*[s.carrier.points for s in structures]))
    point_names = tuple("(" + ",".join(c) + ")" for c in combos)
    prod_carrier = Carrier(point_names)
    size = len(lattice) ** len(prod_carrier)
    if size > budget:
        raise BudgetError(
            f"product function space has {len(lattice)}**{len(prod_carrier)} = {size} members",
            requested=size, budget=budget)
    prod_space = space_for("fuzzy", prod_carrier, lattice)
    projections = tuple(
        SpaceMap(prod_carrier, s.carrier, tuple(c[t] for c in combos))
        for t, s in enumerate(structures))
    phi = np.full(prod_space.size, m.bottom_index, dtype=np.int64)
    for t, s in enumerate(structures):
        factor_space = s.space()
        codes = s.as_codes()
        cols = [projections[t].codomain.index(y) for y in projections[t].graph]
        pulled_codes = factor_space.values_matrix[:, cols] @ prod_space.powers
        for b_code in range(factor_space.size):
            a_code = pulled_codes[b_code]
            phi[a_code] = m.join_table[phi[a_code], codes[b_code]]
    subbase = StructureMap.from_codes(prod_space, m, phi)
    return generate_from_subbase(subbase), projections
