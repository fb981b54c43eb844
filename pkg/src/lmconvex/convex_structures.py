"""Convexity axiom systems over crisp and fuzzy domains.

Four graded variants share one engine:

* classical convexity: a collection of subsets containing the empty set and
  the carrier, closed under intersections and chain unions;
* L-convexity: the same with fuzzy sets and pointwise meets/joins;
* M-fuzzifying convexity: a degree map from subsets into a lattice M;
* (L,M)-fuzzy convexity: a degree map from fuzzy sets into M.

Arbitrary-family axioms reduce to pairwise checks by finite induction, and
the chain axioms are vacuous on finite instances (a finite chain contains
its own join); both facts are documented here, the checks are still
executed, and an exhaustive subfamily oracle is available behind a flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Collection, Iterable, Mapping

import numpy as np

from . import kernels
from .errors import LatticeError, PreconditionError
from .fuzzy_sets import Carrier, FuzzySet, fs_leq, fs_meet
from .lattice_core import FiniteLattice
from .spaces import EnumeratedSpace, TABLE_LIMIT, space_for


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def describe(self) -> str:
        return f"{self.axiom} fails at {self.witness}"


@dataclass(frozen=True)
class ConvexityCertificate:
    verdict: bool
    violations: tuple[Violation, ...]

    def __post_init__(self):
        assert self.verdict == (len(self.violations) == 0)

    def __bool__(self) -> bool:
        return self.verdict


def _certificate(violations: list[Violation]) -> ConvexityCertificate:
    return ConvexityCertificate(len(violations) == 0, tuple(violations))


# ---------------------------------------------------------------------------
# degree maps


class StructureMap:
    """Total degree map from 2^X or L^X into a value lattice M.

    Stored sparsely: explicit entries plus a default degree for every other
    domain element.  Immutable; equality and hashing are extensional.
    """

    def __init__(self, kind: str, carrier: Carrier, lattice: FiniteLattice | None,
                 m: FiniteLattice, entries: Mapping | None = None,
                 default: str | None = None):
        if kind not in ("crisp", "fuzzy"):
            raise LatticeError(f"unknown domain kind {kind!r}")
        if kind == "fuzzy" and lattice is None:
            raise LatticeError("a fuzzy-domain degree map needs a membership lattice")
        if kind == "crisp":
            lattice = None
        self.kind = kind
        self.carrier = carrier
        self.lattice = lattice
        self.m = m
        self.default = m.bottom if default is None else default
        m.index(self.default)
        clean: dict = {}
        for key, value in (entries or {}).items():
            key = self._check_key(key)
            m.index(value)
            if value != self.default:
                clean[key] = value
        self._entries = clean
        self._hash: int | None = None

    def _check_key(self, key):
        if self.kind == "crisp":
            return self.carrier.subset(key)
        if not isinstance(key, FuzzySet):
            raise LatticeError("fuzzy-domain keys must be fuzzy sets")
        if key.carrier != self.carrier or key.lattice != self.lattice:
            raise LatticeError("entry key lives over the wrong carrier or lattice")
        return key

    @classmethod
    def constant(cls, kind: str, carrier: Carrier, lattice: FiniteLattice | None,
                 m: FiniteLattice, value: str) -> "StructureMap":
        return cls(kind, carrier, lattice, m, {}, default=value)

    @classmethod
    def indiscrete(cls, kind: str, carrier: Carrier, lattice: FiniteLattice | None,
                   m: FiniteLattice) -> "StructureMap":
        """The constant-top degree map, the coarsest-valued valid structure."""
        return cls.constant(kind, carrier, lattice, m, m.top)

    # -- evaluation -----------------------------------------------------

    def value(self, key) -> str:
        return self._entries.get(self._check_key(key), self.default)

    def space(self) -> EnumeratedSpace:
        return space_for(self.kind, self.carrier, self.lattice)

    def as_codes(self) -> np.ndarray:
        """Degree of every domain element, indexed by space code."""
        space = self.space()
        codes = np.full(space.size, self.m.index(self.default), dtype=np.int64)
        for key, value in self._entries.items():
            codes[space.code(key)] = self.m.index(value)
        return codes

    @classmethod
    def from_codes(cls, space: EnumeratedSpace, m: FiniteLattice,
                   codes: np.ndarray, default: str | None = None) -> "StructureMap":
        default = m.bottom if default is None else default
        d_idx = m.index(default)
        entries = {space.element(i): m.elements[v]
                   for i, v in enumerate(np.asarray(codes)) if v != d_idx}
        lattice = space.value_lattice if space.kind == "fuzzy" else None
        return cls(space.kind, space.carrier, lattice, m, entries, default=default)

    def sorted_items(self) -> list[tuple]:
        def key_of(k):
            if isinstance(k, frozenset):
                return tuple(sorted(k))
            return k.values
        return sorted(self._entries.items(), key=lambda kv: key_of(kv[0]))

    # -- identity ---------------------------------------------------------

    def _canonical(self):
        return (self.kind, self.carrier, self.lattice, self.m, self.default,
                frozenset(self._entries.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureMap):
            return NotImplemented
        if (self.kind, self.carrier, self.lattice, self.m) != \
                (other.kind, other.carrier, other.lattice, other.m):
            return False
        if self.default == other.default:
            return self._entries == other._entries
        return np.array_equal(self.as_codes(), other.as_codes())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.kind, self.carrier, self.lattice, self.m,
                               self.as_codes().tobytes()))
        return self._hash

    def __repr__(self) -> str:
        dom = "2^X" if self.kind == "crisp" else "L^X"
        return (f"StructureMap({dom} -> M over {len(self.carrier)} points, "
                f"{len(self._entries)} entries, default={self.default!r})")


# ---------------------------------------------------------------------------
# axiom checking


def _degree_axioms(structure: StructureMap, tags: tuple[str, str, str],
                   exhaustive_families: bool, max_family: int) -> ConvexityCertificate:
    space = structure.space()
    m = structure.m
    codes = structure.as_codes()
    violations: list[Violation] = []

    if codes[space.bottom_code] != m.top_index:
        violations.append(Violation(tags[0], (space.element(space.bottom_code),
                                              m.elements[codes[space.bottom_code]])))
    if codes[space.top_code] != m.top_index:
        violations.append(Violation(tags[0], (space.element(space.top_code),
                                              m.elements[codes[space.top_code]])))

    i, j = kernels.first_meet_violation(
        codes, space.values_matrix, space.value_lattice.meet_table,
        space.powers, m.meet_table, m.leq)
    if i >= 0:
        violations.append(Violation(tags[1], (space.element(i), space.element(j))))

    violations.extend(_chain_axiom(space, m, codes, tags[2]))

    if exhaustive_families:
        violations.extend(_family_oracle(space, m, codes, tags, max_family))

    return _certificate(violations)


def _chain_axiom(space: EnumeratedSpace, m: FiniteLattice, codes: np.ndarray,
                 tag: str) -> list[Violation]:
    """Chain axiom over two-element chains.

    A finite totally ordered family contains its maximum, so its join is a
    member and the axiom cannot fail; the check runs anyway so that the
    implementation stays aligned with the axiom list.  Above the table
    limit only a prefix of the domain is swept, which cannot change the
    verdict for the same reason.
    """
    out = []
    limit = min(space.size, TABLE_LIMIT)
    vm = space.values_matrix
    leq_l = space.value_lattice.leq
    for i in range(limit):
        below = leq_l[vm[i][None, :], vm[:limit]].all(axis=1)
        ok = m.leq[m.meet_table[codes[i], codes[:limit][below]], codes[:limit][below]]
        if not ok.all():
            j = int(np.nonzero(below)[0][int(np.argmin(ok))])
            out.append(Violation(tag, (space.element(i), space.element(j))))
            return out
    return out


def _family_oracle(space: EnumeratedSpace, m: FiniteLattice, codes: np.ndarray,
                   tags: tuple[str, str, str], max_family: int) -> list[Violation]:
    """Check the meet and chain axioms over every subfamily up to a size cap."""
    out = []
    lat = space.value_lattice
    vm = space.values_matrix
    for size in range(1, max_family + 1):
        for combo in combinations(range(space.size), size):
            degree = m.top_index
            for c in combo:
                degree = m.meet_table[degree, codes[c]]
            meet_idx = vm[combo[0]].copy()
            for c in combo[1:]:
                meet_idx = lat.meet_table[meet_idx, vm[c]]
            target = space.code_of_indices(meet_idx)
            if not m.leq[degree, codes[target]]:
                out.append(Violation(tags[1], tuple(space.element(c) for c in combo)))
                return out
            ordered = all(
                lat.leq[vm[a], vm[b]].all() or lat.leq[vm[b], vm[a]].all()
                for a, b in combinations(combo, 2))
            if ordered:
                join_idx = vm[combo[0]].copy()
                for c in combo[1:]:
                    join_idx = lat.join_table[join_idx, vm[c]]
                target = space.code_of_indices(join_idx)
                if not m.leq[degree, codes[target]]:
                    out.append(Violation(tags[2], tuple(space.element(c) for c in combo)))
                    return out
    return out


def check_lm_fuzzy(structure: StructureMap, *, exhaustive_families: bool = False,
                   max_family: int = 4) -> ConvexityCertificate:
    """Boundary, meet, and chain axioms of a fuzzy-domain degree map."""
    if structure.kind != "fuzzy":
        raise PreconditionError("expected a degree map over a fuzzy domain")
    return _degree_axioms(structure, ("LMC1", "LMC2", "LMC3"),
                          exhaustive_families, max_family)


def check_m_fuzzifying(structure: StructureMap, *, exhaustive_families: bool = False,
                       max_family: int = 4) -> ConvexityCertificate:
    """Boundary, meet, and chain axioms of a crisp-domain degree map."""
    if structure.kind != "crisp":
        raise PreconditionError("expected a degree map over a crisp domain")
    return _degree_axioms(structure, ("MYC1", "MYC2", "MYC3"),
                          exhaustive_families, max_family)


# ---------------------------------------------------------------------------
# collection-style convexities


def check_classical(sets: Collection[Iterable[str]], carrier: Carrier) -> ConvexityCertificate:
    """Axioms of a plain convexity given as a collection of subsets."""
    family = {carrier.subset(s) for s in sets}
    violations: list[Violation] = []
    empty, full = frozenset(), frozenset(carrier.points)
    for required in (empty, full):
        if required not in family:
            violations.append(Violation("C1", (tuple(sorted(required)),)))
    ordered = sorted(family, key=lambda s: (len(s), tuple(sorted(s))))
    for a, b in combinations(ordered, 2):
        if a & b not in family:
            violations.append(Violation("C2", (tuple(sorted(a)), tuple(sorted(b)))))
            break
    for a, b in combinations(ordered, 2):
        if (a <= b or b <= a) and a | b not in family:
            violations.append(Violation("C3", (tuple(sorted(a)), tuple(sorted(b)))))
            break
    return _certificate(violations)


def check_l_convexity(members: Collection[FuzzySet]) -> ConvexityCertificate:
    """Axioms of an L-convexity given as a collection of fuzzy sets."""
    members = set(members)
    if not members:
        return _certificate([Violation("LC1", ())])
    carrier, lattice = _common_space(members)
    violations: list[Violation] = []
    for required in (FuzzySet.constant(carrier, lattice, lattice.bottom),
                     FuzzySet.constant(carrier, lattice, lattice.top)):
        if required not in members:
            violations.append(Violation("LC1", (required,)))
    ordered = sorted(members, key=lambda s: s.values)
    for a, b in combinations(ordered, 2):
        if fs_meet(a, b) not in members:
            violations.append(Violation("LC2", (a, b)))
            break
    for a, b in combinations(ordered, 2):
        if fs_leq(a, b) or fs_leq(b, a):
            bigger = b if fs_leq(a, b) else a
            if bigger not in members:  # unreachable, executed for fidelity
                violations.append(Violation("LC3", (a, b)))
                break
    return _certificate(violations)


def _common_space(members: Collection[FuzzySet]) -> tuple[Carrier, FiniteLattice]:
    first = next(iter(members))
    for s in members:
        if s.carrier != first.carrier or s.lattice != first.lattice:
            raise PreconditionError("members live over different carriers or lattices")
    return first.carrier, first.lattice


@dataclass(frozen=True)
class LConvexity:
    """A validated collection-style L-convexity."""

    carrier: Carrier
    lattice: FiniteLattice
    members: frozenset[FuzzySet]

    @classmethod
    def create(cls, members: Collection[FuzzySet]) -> "LConvexity":
        cert = check_l_convexity(members)
        if not cert.verdict:
            raise PreconditionError(
                "not an L-convexity: " + "; ".join(v.describe() for v in cert.violations))
        carrier, lattice = _common_space(members)
        return cls(carrier, lattice, frozenset(members))

    @classmethod
    def closure(cls, members: Collection[FuzzySet], carrier: Carrier,
                lattice: FiniteLattice) -> "LConvexity":
        """Smallest L-convexity containing the given fuzzy sets."""
        family = set(members)
        family.add(FuzzySet.constant(carrier, lattice, lattice.bottom))
        family.add(FuzzySet.constant(carrier, lattice, lattice.top))
        grew = True
        while grew:
            grew = False
            for a, b in list(combinations(family, 2)):
                met = fs_meet(a, b)
                if met not in family:
                    family.add(met)
                    grew = True
        return cls(carrier, lattice, frozenset(family))

    def __contains__(self, item: FuzzySet) -> bool:
        return item in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def classical_closure(sets: Collection[Iterable[str]], carrier: Carrier) -> frozenset[frozenset[str]]:
    """Smallest classical convexity containing the given subsets."""
    family = {carrier.subset(s) for s in sets}
    family.add(frozenset())
    family.add(frozenset(carrier.points))
    grew = True
    while grew:
        grew = False
        for a, b in list(combinations(family, 2)):
            cap = a & b
            if cap not in family:
                family.add(cap)
                grew = True
    return frozenset(family)


# ---------------------------------------------------------------------------
# cuts of degree maps


def cut_lower_structure(structure: StructureMap, level: str) -> frozenset:
    """Domain elements whose degree dominates the level (level above bottom)."""
    m = structure.m
    if m.index(level) == m.bottom_index:
        raise PreconditionError("lower structure cuts exclude the bottom level")
    space = structure.space()
    codes = structure.as_codes()
    keep = m.leq[m.index(level), codes]
    return frozenset(space.element(i) for i in np.nonzero(keep)[0])


def cut_upper_structure(structure: StructureMap, level: str) -> frozenset:
    """Domain elements whose degree omits the level from its maximal family.

    Levels range over the maximal family of the bottom of M.
    """
    m = structure.m
    if level not in m.alpha(m.bottom):
        raise PreconditionError(
            f"{level!r} is outside the maximal family of the bottom of M")
    space = structure.space()
    codes = structure.as_codes()
    _, opwedge = m._wedge_matrices()
    li = m.index(level)
    keep = ~opwedge[codes, li]
    return frozenset(space.element(i) for i in np.nonzero(keep)[0])


# ---------------------------------------------------------------------------
# order and meets of degree maps


def is_coarser(c: StructureMap, d: StructureMap) -> bool:
    """Pointwise order: the first map is everywhere below the second."""
    _same_signature(c, d)
    return bool(c.m.leq[c.as_codes(), d.as_codes()].all())


def meet_structures(structures: Collection[StructureMap]) -> StructureMap:
    """Pointwise meet of a nonempty family of degree maps."""
    if not structures:
        raise PreconditionError("meet of an empty family of degree maps")
    first, *rest = structures
    acc = first.as_codes()
    for other in rest:
        _same_signature(first, other)
        acc = first.m.meet_table[acc, other.as_codes()]
    return StructureMap.from_codes(first.space(), first.m, acc)


def _same_signature(a: StructureMap, b: StructureMap) -> None:
    if (a.kind, a.carrier, a.lattice, a.m) != (b.kind, b.carrier, b.lattice, b.m):
        raise PreconditionError("degree maps have different domains or value lattices")


# ---------------------------------------------------------------------------
# rebuilding a degree map from a family of cuts


def structure_from_lower_cuts(m: FiniteLattice, cuts: Mapping[str, Collection]) -> StructureMap:
    """Degree map whose lower cuts reproduce a compatible level family.

    ``cuts`` must assign an L-convexity to every level except the bottom of
    M, and each level's collection must equal the intersection of the
    collections at the levels of its minimal family.  The result maps each
    domain element to the join of the levels whose collection contains it.
    """
    levels = set(m.elements) - {m.bottom}
    if set(cuts) != levels:
        raise PreconditionError(
            "cut family must cover exactly the levels above bottom of M")
    space, sets = _cut_family_space(cuts)
    everything = set(range(space.size))
    by_level = {a: {space.code(x) for x in cuts[a]} for a in cuts}
    for a in sorted(cuts):
        _require_convex(cuts[a], space, a)
        expected = everything.copy()
        for b in m.beta(a):
            if b == m.bottom:
                continue
            expected &= by_level[b]
        if by_level[a] != expected:
            raise PreconditionError(
                f"cut family is incompatible at level {a!r}: the collection is not "
                f"the intersection over the minimal family of the level")
    codes = np.empty(space.size, dtype=np.int64)
    for i in range(space.size):
        codes[i] = m.index(m.join_family(a for a in cuts if i in by_level[a]))
    return StructureMap.from_codes(space, m, codes)


def structure_from_upper_cuts(m: FiniteLattice, cuts: Mapping[str, Collection]) -> StructureMap:
    """Degree map whose upper cuts reproduce a compatible level family.

    Levels range over the maximal family of the bottom of M; compatibility
    requires each collection to equal the intersection of the collections at
    the levels listing it in their maximal family.  The result maps each
    domain element to the meet of the levels whose collection omits it.
    """
    levels = set(m.alpha(m.bottom).members)
    if set(cuts) != levels:
        raise PreconditionError(
            "cut family must cover exactly the maximal family of the bottom of M")
    space, sets = _cut_family_space(cuts)
    everything = set(range(space.size))
    by_level = {a: {space.code(x) for x in cuts[a]} for a in cuts}
    for a in sorted(cuts):
        _require_convex(cuts[a], space, a)
        expected = everything.copy()
        for b in levels:
            if a in m.alpha(b):
                expected &= by_level[b]
        if by_level[a] != expected:
            raise PreconditionError(
                f"cut family is incompatible at level {a!r}: the collection is not "
                f"the intersection over the levels whose maximal family lists it")
    codes = np.empty(space.size, dtype=np.int64)
    for i in range(space.size):
        codes[i] = m.index(m.meet_family(a for a in cuts if i not in by_level[a]))
    return StructureMap.from_codes(space, m, codes)


def _cut_family_space(cuts: Mapping[str, Collection]) -> tuple[EnumeratedSpace, None]:
    members = [x for family in cuts.values() for x in family]
    if not members:
        raise PreconditionError("cut family has no members to infer the domain from")
    first = members[0]
    if isinstance(first, FuzzySet):
        carrier, lattice = _common_space([x for x in members])
        return space_for("fuzzy", carrier, lattice), None
    raise PreconditionError("cut families must consist of fuzzy sets")


def _require_convex(family: Collection, space: EnumeratedSpace, level: str) -> None:
    cert = check_l_convexity(family)
    if not cert.verdict:
        raise PreconditionError(
            f"cut at level {level!r} is not an L-convexity: "
            + "; ".join(v.describe() for v in cert.violations))
