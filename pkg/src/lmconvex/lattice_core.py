"""Finite bounded lattices.

A lattice is given by its full order relation over opaque element names.
The class precomputes meet/join tables, locates the bounds, decides
distributivity, and exposes the completely-below relations together with
the minimal family beta(b) = {a : a wedge-below b} and the maximal family
alpha(a) = {b : a op-wedge-below b}.

For finite lattices, distributivity is equivalent to complete
distributivity, so a distributive instance satisfies every identity that
the degree-structure modules rely on (b = join of beta(b), a = meet of
alpha(a), and the union laws of beta/alpha over joins/meets).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import BudgetError, LatticeError

ORACLE_MAX_SIZE = 16  # 2**n subsets are enumerated by the quantified oracles


@dataclass(frozen=True)
class PosetDiagnostic:
    """Why a relation fails to be a partial order / lattice."""

    kind: str                     # "reflexivity" | "antisymmetry" | "transitivity" | "meet" | "join" | "bounds"
    pair: tuple[str, ...] = ()
    detail: str = ""

    def message(self) -> str:
        if self.pair:
            return f"{self.kind} failure at {self.pair}: {self.detail}"
        return f"{self.kind} failure: {self.detail}"


class FiniteLattice:
    """Finite bounded lattice over named elements.

    Immutable after construction; all arrays are set read-only.  Equality
    and hashing are structural (element names plus order relation).
    """

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        names = tuple(str(e) for e in elements)
        if len(names) == 0:
            raise LatticeError("a lattice needs at least one element")
        if len(set(names)) != len(names):
            raise LatticeError("duplicate element names")
        rel = np.array(leq, dtype=bool)  # copy; the instance owns and freezes it
        if rel.shape != (len(names), len(names)):
            raise LatticeError(f"order relation must be {len(names)}x{len(names)}")
        diag = _poset_diagnostic(names, rel)
        if diag is not None:
            raise LatticeError(diag.message())
        tables = _lattice_tables(names, rel)
        if isinstance(tables, PosetDiagnostic):
            raise LatticeError(tables.message())
        meet, join, bottom, top = tables
        self.elements: tuple[str, ...] = names
        self._index: dict[str, int] = {e: i for i, e in enumerate(names)}
        self.leq = rel
        self.meet_table = meet
        self.join_table = join
        self.bottom_index = bottom
        self.top_index = top
        for arr in (self.leq, self.meet_table, self.join_table):
            arr.setflags(write=False)
        self._hash = hash((names, rel.tobytes()))
        self._distributive: bool | None = None
        self._wedge: np.ndarray | None = None
        self._opwedge: np.ndarray | None = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_cover_pairs(cls, elements: Sequence[str], covers: Iterable[tuple[str, str]]) -> "FiniteLattice":
        """Build from a covering (or any generating) relation.

        Reflexive edges are added and the relation is closed transitively.
        """
        names = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(names)}
        rel = np.eye(len(names), dtype=bool)
        for lo, hi in covers:
            if lo not in index or hi not in index:
                raise LatticeError(f"cover ({lo!r}, {hi!r}) mentions an unknown element")
            rel[index[lo], index[hi]] = True
        return cls(names, _transitive_closure(rel))

    # -- basic queries ------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise LatticeError(f"{element!r} is not an element of this lattice") from None

    @property
    def bottom(self) -> str:
        return self.elements[self.bottom_index]

    @property
    def top(self) -> str:
        return self.elements[self.top_index]

    def leq_holds(self, a: str, b: str) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def meet(self, a: str, b: str) -> str:
        return self.elements[self.meet_table[self.index(a), self.index(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self.join_table[self.index(a), self.index(b)]]

    def meet_family(self, xs: Iterable[str]) -> str:
        """Greatest lower bound; the empty family yields the top element."""
        acc = self.top_index
        for x in xs:
            acc = self.meet_table[acc, self.index(x)]
        return self.elements[acc]

    def join_family(self, xs: Iterable[str]) -> str:
        """Least upper bound; the empty family yields the bottom element."""
        acc = self.bottom_index
        for x in xs:
            acc = self.join_table[acc, self.index(x)]
        return self.elements[acc]

    # -- structure ----------------------------------------------------

    @property
    def is_distributive(self) -> bool:
        if self._distributive is None:
            self._distributive = find_distributivity_violation(self) is None
        return self._distributive

    def _wedge_matrices(self) -> tuple[np.ndarray, np.ndarray]:
        """Closed forms of both completely-below relations.

        a wedge-below b  iff  b is not under the join of {x : not a <= x};
        a op-wedge-below b  iff  the meet of {x : not x <= b} is not under a.
        Any other candidate counterexample subset joins/meets inside these.
        """
        if self._wedge is None:
            n = len(self)
            wedge = np.empty((n, n), dtype=bool)
            opwedge = np.empty((n, n), dtype=bool)
            for a in range(n):
                others = np.nonzero(~self.leq[a, :])[0]
                s = self.bottom_index
                for x in others:
                    s = self.join_table[s, x]
                wedge[a, :] = ~self.leq[:, s]
            for b in range(n):
                others = np.nonzero(~self.leq[:, b])[0]
                t = self.top_index
                for x in others:
                    t = self.meet_table[t, x]
                opwedge[:, b] = ~self.leq[t, :]
            wedge.setflags(write=False)
            opwedge.setflags(write=False)
            self._wedge = wedge
            self._opwedge = opwedge
        return self._wedge, self._opwedge

    def wedge_below(self, a: str, b: str) -> bool:
        return bool(self._wedge_matrices()[0][self.index(a), self.index(b)])

    def op_wedge_below(self, a: str, b: str) -> bool:
        return bool(self._wedge_matrices()[1][self.index(a), self.index(b)])

    def beta(self, b: str) -> "ElementFamily":
        """Greatest minimal family of b: {a : a wedge-below b}."""
        col = self._wedge_matrices()[0][:, self.index(b)]
        return ElementFamily(self, frozenset(self.elements[i] for i in np.nonzero(col)[0]))

    def alpha(self, a: str) -> "ElementFamily":
        """Greatest maximal family of a: {b : a op-wedge-below b}."""
        row = self._wedge_matrices()[1][self.index(a), :]
        return ElementFamily(self, frozenset(self.elements[i] for i in np.nonzero(row)[0]))

    # -- identity -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteLattice({len(self)} elements, bottom={self.bottom!r}, top={self.top!r})"


@dataclass(frozen=True)
class ElementFamily:
    """A subset of a lattice's elements, tagged with its lattice."""

    lattice: FiniteLattice
    members: frozenset[str]

    def __post_init__(self):
        for m in self.members:
            self.lattice.index(m)

    def __contains__(self, element: str) -> bool:
        return element in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


# ---------------------------------------------------------------------------
# validation


def _transitive_closure(rel: np.ndarray) -> np.ndarray:
    out = rel.copy()
    n = out.shape[0]
    for k in range(n):
        out |= out[:, k:k + 1] & out[k:k + 1, :]
    return out


def _poset_diagnostic(names: tuple[str, ...], rel: np.ndarray) -> PosetDiagnostic | None:
    n = len(names)
    for i in range(n):
        if not rel[i, i]:
            return PosetDiagnostic("reflexivity", (names[i],), "missing reflexive edge")
    for i in range(n):
        for j in range(n):
            if i != j and rel[i, j] and rel[j, i]:
                return PosetDiagnostic("antisymmetry", (names[i], names[j]), "two-element cycle")
    closure = _transitive_closure(rel)
    if not np.array_equal(closure, rel):
        diff = np.argwhere(closure & ~rel)
        i, j = diff[0]
        return PosetDiagnostic(
            "transitivity", (names[i], names[j]),
            "pair is related through an intermediate element but not directly",
        )
    return None


def _lattice_tables(names, rel):
    """Meet/join tables plus bound indices, or a diagnostic."""
    n = len(names)
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            lower = rel[:, i] & rel[:, j]
            cands = np.nonzero(lower)[0]
            glb = [c for c in cands if np.all(~lower | rel[:, c])]
            if len(glb) != 1:
                return PosetDiagnostic("meet", (names[i], names[j]),
                                       f"{len(glb)} greatest lower bounds")
            meet[i, j] = glb[0]
            upper = rel[i, :] & rel[j, :]
            cands = np.nonzero(upper)[0]
            lub = [c for c in cands if np.all(~upper | rel[c, :])]
            if len(lub) != 1:
                return PosetDiagnostic("join", (names[i], names[j]),
                                       f"{len(lub)} least upper bounds")
            join[i, j] = lub[0]
    bottoms = [i for i in range(n) if rel[i, :].all()]
    tops = [i for i in range(n) if rel[:, i].all()]
    if len(bottoms) != 1 or len(tops) != 1:
        return PosetDiagnostic("bounds", (), "missing bottom or top element")
    return meet, join, bottoms[0], tops[0]


@dataclass(frozen=True)
class LatticeReport:
    """Outcome of validating candidate order data."""

    ok: bool
    element_count: int
    diagnostic: PosetDiagnostic | None
    bottom: str | None
    top: str | None
    is_distributive: bool | None
    lattice: FiniteLattice | None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "elements": self.element_count,
            "diagnostic": None if self.diagnostic is None else self.diagnostic.message(),
            "bottom": self.bottom,
            "top": self.top,
            "distributive": self.is_distributive,
        }


def verify_lattice(elements: Sequence[str], pairs: Iterable[tuple[str, str]] | None = None,
                   *, leq: np.ndarray | None = None, closed: bool = False) -> LatticeReport:
    """Check that a relation is a bounded lattice order.

    ``pairs`` lists related pairs (lower, upper); reflexive edges are added
    and, unless ``closed`` is set, the relation is transitively closed.
    Alternatively a full boolean matrix may be passed as ``leq``.
    """
    names = tuple(str(e) for e in elements)
    if len(names) == 0 or len(set(names)) != len(names):
        diag = PosetDiagnostic("elements", (), "empty or duplicated element names")
        return LatticeReport(False, len(names), diag, None, None, None, None)
    if leq is None:
        index = {e: i for i, e in enumerate(names)}
        rel = np.eye(len(names), dtype=bool)
        for lo, hi in pairs or ():
            if lo not in index or hi not in index:
                diag = PosetDiagnostic("elements", (str(lo), str(hi)), "pair mentions an unknown element")
                return LatticeReport(False, len(names), diag, None, None, None, None)
            rel[index[lo], index[hi]] = True
        if not closed:
            rel = _transitive_closure(rel)
    else:
        rel = np.asarray(leq, dtype=bool)
    diag = _poset_diagnostic(names, rel)
    if diag is not None:
        return LatticeReport(False, len(names), diag, None, None, None, None)
    tables = _lattice_tables(names, rel)
    if isinstance(tables, PosetDiagnostic):
        return LatticeReport(False, len(names), tables, None, None, None, None)
    lat = FiniteLattice(names, rel)
    return LatticeReport(True, len(names), None, lat.bottom, lat.top, lat.is_distributive, lat)


# ---------------------------------------------------------------------------
# distributivity


def find_distributivity_violation(lat: FiniteLattice) -> tuple[str, str, str] | None:
    """A triple with x /\\ (y \\/ z) != (x /\\ y) \\/ (x /\\ z), if any."""
    meet, join = lat.meet_table, lat.join_table
    lhs = meet[:, join]                                   # [x, y, z]
    rhs = join[meet[:, :, None], meet[:, None, :]]        # [x, y, z]
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    x, y, z = bad[0]
    return (lat.elements[x], lat.elements[y], lat.elements[z])


def is_distributive(lat: FiniteLattice) -> bool:
    return lat.is_distributive


# ---------------------------------------------------------------------------
# quantified oracles for the completely-below relations


def _oracle_guard(lat: FiniteLattice) -> None:
    if len(lat) > ORACLE_MAX_SIZE:
        raise BudgetError(
            f"subset-quantified oracle enumerates 2**{len(lat)} subsets",
            requested=len(lat), budget=ORACLE_MAX_SIZE,
        )


def wedge_oracle_matrices(lat: FiniteLattice) -> tuple[np.ndarray, np.ndarray]:
    """Both completely-below relations, decided by enumerating every subset.

    Independent of the closed forms: for each pair the defining implication
    is tested against all 2**n subsets (the empty set included).
    """
    _oracle_guard(lat)
    return kernels.wedge_oracle(
        lat.leq, lat.meet_table, lat.join_table,
        int(lat.bottom_index), int(lat.top_index),
    )


def wedge_below_oracle(lat: FiniteLattice, a: str, b: str) -> bool:
    """Subset-quantified form of ``a`` wedge-below ``b``."""
    _oracle_guard(lat)
    ia, ib = lat.index(a), lat.index(b)
    n = len(lat)
    for bits in range(1 << n):
        members = [x for x in range(n) if bits >> x & 1]
        sup = lat.bottom_index
        for x in members:
            sup = lat.join_table[sup, x]
        if lat.leq[ib, sup] and not any(lat.leq[ia, x] for x in members):
            return False
    return True


def op_wedge_below_oracle(lat: FiniteLattice, a: str, b: str) -> bool:
    """Subset-quantified form of ``a`` op-wedge-below ``b``."""
    _oracle_guard(lat)
    ia, ib = lat.index(a), lat.index(b)
    n = len(lat)
    for bits in range(1 << n):
        members = [x for x in range(n) if bits >> x & 1]
        inf = lat.top_index
        for x in members:
            inf = lat.meet_table[inf, x]
        if lat.leq[inf, ia] and not any(lat.leq[x, ib] for x in members):
            return False
    return True


def check_beta_meet_hypothesis(lat: FiniteLattice) -> bool:
    """Whether beta(a /\\ b) = beta(a) & beta(b) for every pair.

    Degree-structure translations between crisp and fuzzy domains require
    this certificate on the membership-value lattice.
    """
    wedge, _ = lat._wedge_matrices()
    lhs = wedge[:, lat.meet_table]                    # [c, a, b]
    rhs = wedge[:, :, None] & wedge[:, None, :]       # [c, a, b]
    return bool(np.array_equal(lhs, rhs))
