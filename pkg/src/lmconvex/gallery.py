"""Concrete generators of degree structures, usable as test corpora.

Every generator here produces something the axiom checkers accept: degree
structures built from a betweenness (interval) operator through the
residuum, graded upper-set structures of a fuzzy relation, and the
collection of fuzzy convex sublattices of a finite lattice carrier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .catalog import chain, diamond
from .convex_structures import StructureMap
from .errors import LatticeError, PreconditionError
from .fuzzy_sets import Carrier, FuzzySet
from .lattice_core import FiniteLattice
from .spaces import fuzzy_space


def residuum(lat: FiniteLattice, a: str, b: str) -> str:
    """Relative pseudocomplement: the largest c with a /\\ c <= b.

    Requires a distributive lattice, where the defining join itself
    satisfies a /\\ (a -> b) <= b and the adjunction
    c <= (a -> b)  iff  a /\\ c <= b.
    """
    if not lat.is_distributive:
        raise PreconditionError("the residuum needs a distributive lattice")
    ia, ib = lat.index(a), lat.index(b)
    sel = lat.leq[lat.meet_table[ia, :], ib]
    out = lat.bottom_index
    for c in np.nonzero(sel)[0]:
        out = lat.join_table[out, c]
    return lat.elements[out]


def residuum_table(lat: FiniteLattice) -> np.ndarray:
    if not lat.is_distributive:
        raise PreconditionError("the residuum needs a distributive lattice")
    n = len(lat)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            sel = lat.leq[lat.meet_table[a, :], b]
            out = lat.bottom_index
            for c in np.nonzero(sel)[0]:
                out = lat.join_table[out, c]
            table[a, b] = out
    return table


@dataclass(frozen=True)
class IntervalOperator:
    """Symmetric betweenness data: the segment spanned by each point pair."""

    carrier: Carrier
    segments: Mapping[tuple[str, str], frozenset[str]]

    @classmethod
    def from_mapping(cls, carrier: Carrier,
                     segments: Mapping[tuple[str, str], frozenset[str] | set[str] | tuple[str, ...]]
                     ) -> "IntervalOperator":
        table: dict[tuple[str, str], frozenset[str]] = {}
        for (x, y), seg in segments.items():
            table[(x, y)] = carrier.subset(seg)
            table[(y, x)] = table[(x, y)]
        for x in carrier.points:
            for y in carrier.points:
                if (x, y) not in table:
                    table[(x, y)] = table.get((y, x), frozenset((x, y)))
        for (x, y), s in table.items():
            if x not in s or y not in s:
                raise PreconditionError(f"segment of ({x!r}, {y!r}) must contain its endpoints")
            if table[(y, x)] != s:
                raise PreconditionError(f"segments of ({x!r}, {y!r}) are not symmetric")
        return cls(carrier, table)

    @classmethod
    def trivial(cls, carrier: Carrier) -> "IntervalOperator":
        return cls.from_mapping(carrier, {})

    @classmethod
    def path(cls, carrier: Carrier) -> "IntervalOperator":
        """Points on a line in carrier order; segments are index ranges."""
        pts = carrier.points
        segs = {}
        for i, x in enumerate(pts):
            for j, y in enumerate(pts):
                lo, hi = min(i, j), max(i, j)
                segs[(x, y)] = frozenset(pts[lo:hi + 1])
        return cls.from_mapping(carrier, segs)

    def segment(self, x: str, y: str) -> frozenset[str]:
        return self.segments[(x, y)]


def interval_degree_structure(op: IntervalOperator, lat: FiniteLattice) -> StructureMap:
    """Degree of convexity along a betweenness operator.

    A fuzzy set's degree is the meet, over point pairs and the points of
    their segment, of the residuum from the pair's membership meet into the
    segment point's membership.  Membership and degree lattices coincide.
    """
    arrow = residuum_table(lat)
    space = fuzzy_space(op.carrier, lat)
    vm = space.values_matrix
    idx = {p: i for i, p in enumerate(op.carrier.points)}
    out = np.full(space.size, lat.top_index, dtype=np.int64)
    pairs = [(x, y) for x in op.carrier.points for y in op.carrier.points]
    for x, y in pairs:
        ends = lat.meet_table[vm[:, idx[x]], vm[:, idx[y]]]
        for z in op.segment(x, y):
            out = lat.meet_table[out, arrow[ends, vm[:, idx[z]]]]
    return StructureMap.from_codes(space, lat, out)


@dataclass(frozen=True)
class FuzzyRelation:
    """Total lattice-valued binary relation on a carrier."""

    carrier: Carrier
    lattice: FiniteLattice
    values: tuple[tuple[str, ...], ...]

    @classmethod
    def from_mapping(cls, carrier: Carrier, lattice: FiniteLattice,
                     mapping: Mapping[tuple[str, str], str],
                     default: str | None = None) -> "FuzzyRelation":
        default = lattice.bottom if default is None else default
        lattice.index(default)
        rows = []
        for x in carrier.points:
            rows.append(tuple(mapping.get((x, y), default) for y in carrier.points))
        return cls(carrier, lattice, tuple(rows))

    @classmethod
    def crisp(cls, carrier: Carrier, lattice: FiniteLattice,
              pairs: set[tuple[str, str]] | frozenset[tuple[str, str]]) -> "FuzzyRelation":
        return cls.from_mapping(carrier, lattice,
                                {p: lattice.top for p in pairs})

    def __call__(self, x: str, y: str) -> str:
        return self.values[self.carrier.index(x)][self.carrier.index(y)]


def upper_set_structure(relation: FuzzyRelation, *, literal: bool = False) -> StructureMap:
    """Graded collection of upper sets of a fuzzy relation.

    The degree of a fuzzy set U is the meet over point pairs (x, y) of
    R(x,y) -> (U(x) -> U(y)).  With ``literal`` the final term becomes
    U(x) -> U(x), which is constantly top and collapses the structure to
    the indiscrete one; it is kept for comparison.
    """
    lat = relation.lattice
    arrow = residuum_table(lat)
    space = fuzzy_space(relation.carrier, lat)
    vm = space.values_matrix
    idx = {p: i for i, p in enumerate(relation.carrier.points)}
    out = np.full(space.size, lat.top_index, dtype=np.int64)
    for x in relation.carrier.points:
        for y in relation.carrier.points:
            r = lat.index(relation(x, y))
            second = idx[x] if literal else idx[y]
            inner = arrow[vm[:, idx[x]], vm[:, second]]
            out = lat.meet_table[out, arrow[np.full(space.size, r), inner]]
    return StructureMap.from_codes(space, lat, out)


def fuzzy_convex_sublattice_family(carrier_lattice: FiniteLattice,
                                   value_chain: FiniteLattice) -> frozenset[FuzzySet]:
    """All fuzzy convex sublattices of a lattice-shaped carrier.

    A fuzzy set qualifies when its value at a meet and at a join dominates
    the meet of the values at the arguments, and its value on each order
    interval dominates the meet of the values at the interval's endpoints.
    The value lattice is expected to be a chain.
    """
    n = len(value_chain)
    for a in range(n):
        for b in range(n):
            if not (value_chain.leq[a, b] or value_chain.leq[b, a]):
                raise PreconditionError("membership values must form a chain")
    carrier = Carrier(carrier_lattice.elements)
    space = fuzzy_space(carrier, value_chain)
    vm = space.values_matrix
    g_meet, g_join = carrier_lattice.meet_table, carrier_lattice.join_table
    v_meet, v_leq = value_chain.meet_table, value_chain.leq
    keep = np.ones(space.size, dtype=bool)
    npts = len(carrier)
    for i in range(npts):
        for j in range(npts):
            bound = v_meet[vm[:, i], vm[:, j]]
            keep &= v_leq[bound, vm[:, g_meet[i, j]]]
            keep &= v_leq[bound, vm[:, g_join[i, j]]]
            interval = [k for k in range(npts)
                        if carrier_lattice.leq[i, k] and carrier_lattice.leq[k, j]]
            for k in interval:
                keep &= v_leq[bound, vm[:, k]]
    return frozenset(space.element(i) for i in np.nonzero(keep)[0])


def crisp_convex_sublattices(carrier_lattice: FiniteLattice) -> frozenset[frozenset[str]]:
    """Plain convex sublattices, for cross-checking the fuzzy family."""
    n = len(carrier_lattice)
    out = []
    for bits in range(1 << n):
        members = [i for i in range(n) if bits >> i & 1]
        ok = True
        for i in members:
            for j in members:
                if not (bits >> carrier_lattice.meet_table[i, j] & 1
                        and bits >> carrier_lattice.join_table[i, j] & 1):
                    ok = False
                    break
                for k in range(n):
                    if carrier_lattice.leq[i, k] and carrier_lattice.leq[k, j] \
                            and not bits >> k & 1:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(carrier_lattice.elements[i] for i in members))
    return frozenset(out)


# ---------------------------------------------------------------------------
# named gallery entries for the command line


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    description: str
    build: Callable[[], object] = field(repr=False)


def _line3_interval() -> StructureMap:
    carrier = Carrier(("p1", "p2", "p3"))
    return interval_degree_structure(IntervalOperator.path(carrier), chain(3))


def _trivial_interval() -> StructureMap:
    carrier = Carrier(("p1", "p2"))
    return interval_degree_structure(IntervalOperator.trivial(carrier), chain(2))


def _poset3_upper(literal: bool = False) -> StructureMap:
    carrier = Carrier(("u", "v", "w"))
    lat = chain(3)
    pairs = {(x, x) for x in carrier.points} | {("u", "v"), ("v", "w"), ("u", "w")}
    return upper_set_structure(FuzzyRelation.crisp(carrier, lat, pairs), literal=literal)


def _sublattices_diamond() -> frozenset[FuzzySet]:
    return fuzzy_convex_sublattice_family(diamond(), chain(3))


GALLERY: dict[str, GalleryEntry] = {
    "interval-line3-chain3": GalleryEntry(
        "interval-line3-chain3",
        "degree structure of a three-point path under a three-chain",
        _line3_interval),
    "interval-trivial-chain2": GalleryEntry(
        "interval-trivial-chain2",
        "degree structure of endpoint-only segments; constant top",
        _trivial_interval),
    "upper-sets-poset3-chain3": GalleryEntry(
        "upper-sets-poset3-chain3",
        "graded upper sets of a crisp three-point total order",
        _poset3_upper),
    "sublattices-diamond-chain3": GalleryEntry(
        "sublattices-diamond-chain3",
        "fuzzy convex sublattices of the Boolean square under a three-chain",
        _sublattices_diamond),
}


def gallery_names() -> tuple[str, ...]:
    return tuple(sorted(GALLERY))


def gallery_build(name: str, *, literal: bool = False):
    if name not in GALLERY:
        raise LatticeError(f"unknown gallery entry {name!r}")
    if name == "upper-sets-poset3-chain3":
        return _poset3_upper(literal)
    return GALLERY[name].build()
