"""Predicates on maps between structured spaces.

A structured-space pair bundles a carrier map with degree structures on its
endpoints.  The predicates (degree-preserving, convex-to-convex, quotient
function) all return a witness on failure, and the cut-level report checks
that the graded predicate agrees with its family of plain-convexity
restrictions at every level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import preimage_structure
from .convex_structures import StructureMap, cut_lower_structure, cut_upper_structure
from .errors import PreconditionError
from .fuzzy_sets import (SpaceMap, backward_image, forward_image, image_subset,
                         preimage_subset)


@dataclass(frozen=True)
class SpacePair:
    """A carrier map together with structures on its domain and codomain."""

    map: SpaceMap
    source: StructureMap
    target: StructureMap

    def __post_init__(self):
        if self.map.domain != self.source.carrier:
            raise PreconditionError("map domain does not match the source carrier")
        if self.map.codomain != self.target.carrier:
            raise PreconditionError("map codomain does not match the target carrier")
        if self.source.kind != self.target.kind:
            raise PreconditionError("source and target structures have different domain kinds")
        if self.source.m != self.target.m:
            raise PreconditionError("source and target structures value in different lattices")
        if self.source.kind == "fuzzy" and self.source.lattice != self.target.lattice:
            raise PreconditionError("source and target structures use different membership lattices")


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.holds


def _pull_back(pair: SpacePair, element):
    if pair.source.kind == "fuzzy":
        return backward_image(pair.map, element)
    return preimage_subset(pair.map, element)


def is_cpf(pair: SpacePair) -> PredicateResult:
    """Degree preservation: pulling back never lowers the degree.

    Fails with the first codomain set whose degree exceeds the degree of its
    backward image.
    """
    tgt_space = pair.target.space()
    m = pair.source.m
    for code in range(tgt_space.size):
        b = tgt_space.element(code)
        a = _pull_back(pair, b)
        if not m.leq_holds(pair.target.value(b), pair.source.value(a)):
            return PredicateResult(False, b)
    return PredicateResult(True)


@dataclass(frozen=True)
class PreimageCpfReport:
    direct: bool
    via_preimage: bool

    @property
    def agree(self) -> bool:
        return self.direct == self.via_preimage

    def __bool__(self) -> bool:
        return self.via_preimage


def is_cpf_via_preimage(pair: SpacePair) -> PreimageCpfReport:
    """Degree preservation decided through the pulled-back structure.

    For a surjective map, preservation is equivalent to the backward
    transport of the target structure sitting below the source structure;
    both routes are computed so callers can compare them.
    """
    if pair.source.kind != "fuzzy":
        raise PreconditionError("the preimage characterization is for fuzzy-domain structures")
    if not pair.map.is_surjective:
        raise PreconditionError("the preimage characterization assumes a surjective map")
    pulled = preimage_structure(pair.target, pair.map)
    m = pair.source.m
    via = bool(m.leq[pulled.as_codes(), pair.source.as_codes()].all())
    return PreimageCpfReport(direct=is_cpf(pair).holds, via_preimage=via)


def is_convex_to_convex(pair: SpacePair) -> PredicateResult:
    """Forward images never lower the degree.

    Fails with the first domain set whose degree exceeds the degree of its
    forward image.
    """
    src_space = pair.source.space()
    m = pair.source.m
    for code in range(src_space.size):
        a = src_space.element(code)
        if pair.source.kind == "fuzzy":
            b = forward_image(pair.map, a)
        else:
            b = image_subset(pair.map, a)
        if not m.leq_holds(pair.source.value(a), pair.target.value(b)):
            return PredicateResult(False, a)
    return PredicateResult(True)


def is_quotient_function(pair: SpacePair) -> PredicateResult:
    """Surjectivity plus exact degree transport along backward images."""
    if not pair.map.is_surjective:
        return PredicateResult(False, "map is not surjective")
    tgt_space = pair.target.space()
    for code in range(tgt_space.size):
        b = tgt_space.element(code)
        a = _pull_back(pair, b)
        if pair.target.value(b) != pair.source.value(a):
            return PredicateResult(False, b)
    return PredicateResult(True)


@dataclass(frozen=True)
class CutEquivalenceReport:
    """Graded preservation against its plain restrictions at every level."""

    direct: bool
    lower_levels: tuple[tuple[str, bool], ...]
    upper_levels: tuple[tuple[str, bool], ...]

    @property
    def lower_all(self) -> bool:
        return all(ok for _, ok in self.lower_levels)

    @property
    def upper_all(self) -> bool:
        return all(ok for _, ok in self.upper_levels)

    @property
    def consistent(self) -> bool:
        return self.direct == self.lower_all == self.upper_all


def _cut_level_preserving(pair: SpacePair, source_cut: frozenset,
                          target_cut: frozenset) -> bool:
    return all(_pull_back(pair, b) in source_cut for b in target_cut)


def cpf_cut_equivalence(pair: SpacePair) -> CutEquivalenceReport:
    """Compare graded preservation with level-wise plain preservation.

    Lower levels range over the value lattice above bottom; upper levels
    over the maximal family of bottom.  The three verdicts must agree.
    """
    m = pair.source.m
    direct = is_cpf(pair).holds
    lower = []
    for level in m.elements:
        if level == m.bottom:
            continue
        ok = _cut_level_preserving(
            pair, cut_lower_structure(pair.source, level),
            cut_lower_structure(pair.target, level))
        lower.append((level, ok))
    upper = []
    for level in sorted(m.alpha(m.bottom).members):
        ok = _cut_level_preserving(
            pair, cut_upper_structure(pair.source, level),
            cut_upper_structure(pair.target, level))
        upper.append((level, ok))
    return CutEquivalenceReport(direct, tuple(lower), tuple(upper))
