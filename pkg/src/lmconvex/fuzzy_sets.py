"""Lattice-valued fuzzy sets over a finite carrier.

Membership values live in a finite lattice L.  The module provides the
pointwise algebra, the three cut operators (threshold, maximal-family,
minimal-family), the scalar-with-set combinations used by the cut
decomposition identity, and forward/backward images along carrier maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import LatticeError, PreconditionError
from .lattice_core import FiniteLattice


@dataclass(frozen=True)
class Carrier:
    """Nonempty finite ground set of named points."""

    points: tuple[str, ...]

    def __post_init__(self):
        if len(self.points) == 0:
            raise PreconditionError("carrier must be nonempty")
        if len(set(self.points)) != len(self.points):
            raise PreconditionError("duplicate point names in carrier")

    @classmethod
    def of(cls, *points: str) -> "Carrier":
        return cls(tuple(points))

    def index(self, point: str) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise LatticeError(f"{point!r} is not a carrier point") from None

    def subset(self, points: Iterable[str]) -> frozenset[str]:
        s = frozenset(points)
        for p in s:
            self.index(p)
        return s

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class FuzzySet:
    """Total map from carrier points into a membership lattice."""

    carrier: Carrier
    lattice: FiniteLattice
    values: tuple[str, ...]

    def __post_init__(self):
        if len(self.values) != len(self.carrier):
            raise LatticeError("one membership value per carrier point is required")
        for v in self.values:
            self.lattice.index(v)

    @classmethod
    def from_mapping(cls, carrier: Carrier, lattice: FiniteLattice,
                     mapping: Mapping[str, str]) -> "FuzzySet":
        missing = [p for p in carrier.points if p not in mapping]
        if missing:
            raise LatticeError(f"membership map is missing points {missing}")
        return cls(carrier, lattice, tuple(mapping[p] for p in carrier.points))

    @classmethod
    def constant(cls, carrier: Carrier, lattice: FiniteLattice, value: str) -> "FuzzySet":
        lattice.index(value)
        return cls(carrier, lattice, (value,) * len(carrier))

    @classmethod
    def characteristic(cls, carrier: Carrier, lattice: FiniteLattice,
                       subset: Iterable[str]) -> "FuzzySet":
        s = carrier.subset(subset)
        top, bot = lattice.top, lattice.bottom
        return cls(carrier, lattice, tuple(top if p in s else bot for p in carrier.points))

    def __call__(self, point: str) -> str:
        return self.values[self.carrier.index(point)]

    @property
    def is_crisp(self) -> bool:
        return all(v in (self.lattice.bottom, self.lattice.top) for v in self.values)

    def support_of_top(self) -> frozenset[str]:
        top = self.lattice.top
        return frozenset(p for p, v in zip(self.carrier.points, self.values) if v == top)


def fs_meet(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_space(a, b)
    return FuzzySet(a.carrier, a.lattice,
                    tuple(a.lattice.meet(x, y) for x, y in zip(a.values, b.values)))


def fs_join(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_space(a, b)
    return FuzzySet(a.carrier, a.lattice,
                    tuple(a.lattice.join(x, y) for x, y in zip(a.values, b.values)))


def fs_leq(a: FuzzySet, b: FuzzySet) -> bool:
    _same_space(a, b)
    return all(a.lattice.leq_holds(x, y) for x, y in zip(a.values, b.values))


def fs_meet_family(sets: Iterable[FuzzySet], *, carrier: Carrier, lattice: FiniteLattice) -> FuzzySet:
    """Pointwise meet; the empty family yields the constant top."""
    acc = FuzzySet.constant(carrier, lattice, lattice.top)
    for s in sets:
        acc = fs_meet(acc, s)
    return acc


def fs_join_family(sets: Iterable[FuzzySet], *, carrier: Carrier, lattice: FiniteLattice) -> FuzzySet:
    """Pointwise join; the empty family yields the constant bottom."""
    acc = FuzzySet.constant(carrier, lattice, lattice.bottom)
    for s in sets:
        acc = fs_join(acc, s)
    return acc


def _same_space(a: FuzzySet, b: FuzzySet) -> None:
    if a.carrier != b.carrier or a.lattice != b.lattice:
        raise PreconditionError("fuzzy sets live over different carriers or lattices")


# ---------------------------------------------------------------------------
# cut operators


def cut_lower(a_set: FuzzySet, level: str) -> frozenset[str]:
    """Threshold cut: points whose membership dominates the level."""
    lat = a_set.lattice
    lat.index(level)
    return frozenset(p for p, v in zip(a_set.carrier.points, a_set.values)
                     if lat.leq_holds(level, v))


def cut_upper(a_set: FuzzySet, level: str) -> frozenset[str]:
    """Points whose membership does not list the level in its maximal family."""
    lat = a_set.lattice
    lat.index(level)
    return frozenset(p for p, v in zip(a_set.carrier.points, a_set.values)
                     if level not in lat.alpha(v))


def cut_strict(a_set: FuzzySet, level: str) -> frozenset[str]:
    """Points whose membership lists the level in its minimal family."""
    lat = a_set.lattice
    lat.index(level)
    return frozenset(p for p, v in zip(a_set.carrier.points, a_set.values)
                     if level in lat.beta(v))


def scalar_meet(level: str, subset: Iterable[str], carrier: Carrier,
                lattice: FiniteLattice) -> FuzzySet:
    """The fuzzy set valued ``level`` on the subset and bottom elsewhere."""
    lattice.index(level)
    s = carrier.subset(subset)
    bot = lattice.bottom
    return FuzzySet(carrier, lattice, tuple(level if p in s else bot for p in carrier.points))


def scalar_join(level: str, subset: Iterable[str], carrier: Carrier,
                lattice: FiniteLattice) -> FuzzySet:
    """The fuzzy set valued top on the subset and ``level`` elsewhere."""
    lattice.index(level)
    s = carrier.subset(subset)
    top = lattice.top
    return FuzzySet(carrier, lattice, tuple(top if p in s else level for p in carrier.points))


@dataclass(frozen=True)
class DecompositionReport:
    """Both cut-decomposition reconstructions of a fuzzy set."""

    original: FuzzySet
    lower_reconstruction: FuzzySet
    upper_reconstruction: FuzzySet

    @property
    def ok(self) -> bool:
        return (self.lower_reconstruction == self.original
                and self.upper_reconstruction == self.original)


def decompose(a_set: FuzzySet) -> DecompositionReport:
    """Rebuild a fuzzy set from its cuts in both canonical ways.

    The join over all levels of (level on the threshold cut) and the meet
    over all levels of (top on the upper cut, level elsewhere) must each
    reproduce the set; the report materializes both sides.
    """
    carrier, lat = a_set.carrier, a_set.lattice
    lower = fs_join_family(
        (scalar_meet(a, cut_lower(a_set, a), carrier, lat) for a in lat.elements),
        carrier=carrier, lattice=lat)
    upper = fs_meet_family(
        (scalar_join(a, cut_upper(a_set, a), carrier, lat) for a in lat.elements),
        carrier=carrier, lattice=lat)
    return DecompositionReport(a_set, lower, upper)


# ---------------------------------------------------------------------------
# maps between carriers


@dataclass(frozen=True)
class SpaceMap:
    """Total function between carriers, stored pointwise."""

    domain: Carrier
    codomain: Carrier
    graph: tuple[str, ...]

    def __post_init__(self):
        if len(self.graph) != len(self.domain):
            raise PreconditionError("one image per domain point is required")
        for y in self.graph:
            self.codomain.index(y)

    @classmethod
    def from_mapping(cls, domain: Carrier, codomain: Carrier,
                     mapping: Mapping[str, str]) -> "SpaceMap":
        missing = [p for p in domain.points if p not in mapping]
        if missing:
            raise PreconditionError(f"map is missing domain points {missing}")
        return cls(domain, codomain, tuple(mapping[p] for p in domain.points))

    @classmethod
    def identity(cls, carrier: Carrier) -> "SpaceMap":
        return cls(carrier, carrier, carrier.points)

    def __call__(self, point: str) -> str:
        return self.graph[self.domain.index(point)]

    @property
    def is_surjective(self) -> bool:
        return set(self.graph) == set(self.codomain.points)

    def fiber(self, y: str) -> frozenset[str]:
        self.codomain.index(y)
        return frozenset(x for x, fx in zip(self.domain.points, self.graph) if fx == y)


def compose(g: SpaceMap, f: SpaceMap) -> SpaceMap:
    """g after f."""
    if f.codomain != g.domain:
        raise PreconditionError("maps are not composable")
    return SpaceMap(f.domain, g.codomain, tuple(g(y) for y in f.graph))


def forward_image(f: SpaceMap, a_set: FuzzySet) -> FuzzySet:
    """Join of memberships over each fiber; empty fibers get bottom."""
    if a_set.carrier != f.domain:
        raise PreconditionError("fuzzy set is not over the map's domain")
    lat = a_set.lattice
    values = []
    for y in f.codomain.points:
        values.append(lat.join_family(a_set(x) for x in f.fiber(y)))
    return FuzzySet(f.codomain, lat, tuple(values))


def backward_image(f: SpaceMap, b_set: FuzzySet) -> FuzzySet:
    """Composition of the membership map with the carrier map."""
    if b_set.carrier != f.codomain:
        raise PreconditionError("fuzzy set is not over the map's codomain")
    return FuzzySet(f.domain, b_set.lattice, tuple(b_set(y) for y in f.graph))


def preimage_subset(f: SpaceMap, subset: Iterable[str]) -> frozenset[str]:
    s = f.codomain.subset(subset)
    return frozenset(x for x, fx in zip(f.domain.points, f.graph) if fx in s)


def image_subset(f: SpaceMap, subset: Iterable[str]) -> frozenset[str]:
    s = f.domain.subset(subset)
    return frozenset(f(x) for x in s)
