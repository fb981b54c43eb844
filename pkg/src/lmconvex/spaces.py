"""Integer-coded enumerations of 2^X and L^X.

Degree maps and their axiom checks run over the full function space of a
small carrier.  Each space enumerates its members with mixed-radix codes
(code = sum over points of value_index * |L|**position) and exposes the
value matrix plus lattice tables in the layout the kernels consume.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .catalog import chain
from .errors import BudgetError, LatticeError
from .fuzzy_sets import Carrier, FuzzySet
from .lattice_core import FiniteLattice

MAX_SPACE_SIZE = 1 << 22
TABLE_LIMIT = 2048  # above this, S x S tables are not materialized


class EnumeratedSpace:
    """Shared coding machinery; subclasses fix the element type."""

    kind: str

    def __init__(self, carrier: Carrier, value_lattice: FiniteLattice):
        self.carrier = carrier
        self.value_lattice = value_lattice
        n, k = len(value_lattice), len(carrier)
        size = n ** k
        if size > MAX_SPACE_SIZE:
            raise BudgetError(
                f"function space has {n}**{k} members",
                requested=size, budget=MAX_SPACE_SIZE,
            )
        self.size = size
        self.powers = (n ** np.arange(k, dtype=np.int64))
        codes = np.arange(size, dtype=np.int64)
        self.values_matrix = (codes[:, None] // self.powers[None, :]) % n
        self.values_matrix.setflags(write=False)
        self.bottom_code = self.code_of_indices([value_lattice.bottom_index] * k)
        self.top_code = self.code_of_indices([value_lattice.top_index] * k)
        self._elements: list | None = None
        self._meet_codes: np.ndarray | None = None
        self._join_codes: np.ndarray | None = None

    # -- codes ----------------------------------------------------------

    def code_of_indices(self, idx: Sequence[int]) -> int:
        return int(np.dot(np.asarray(idx, dtype=np.int64), self.powers))

    def meet_codes(self) -> np.ndarray:
        if self._meet_codes is None:
            self._table_guard()
            self._meet_codes = kernels.pair_codes(
                self.values_matrix, self.value_lattice.meet_table, self.powers)
            self._meet_codes.setflags(write=False)
        return self._meet_codes

    def join_codes(self) -> np.ndarray:
        if self._join_codes is None:
            self._table_guard()
            self._join_codes = kernels.pair_codes(
                self.values_matrix, self.value_lattice.join_table, self.powers)
            self._join_codes.setflags(write=False)
        return self._join_codes

    def _table_guard(self) -> None:
        if self.size > TABLE_LIMIT:
            raise BudgetError(
                f"pairwise table over {self.size} members is above the table limit",
                requested=self.size, budget=TABLE_LIMIT,
            )

    # -- elements --------------------------------------------------------

    def elements(self) -> list:
        if self._elements is None:
            self._elements = [self._build(i) for i in range(self.size)]
        return self._elements

    def element(self, code: int):
        if self._elements is not None:
            return self._elements[code]
        return self._build(int(code))

    def _build(self, code: int):
        raise NotImplementedError

    def code(self, obj) -> int:
        raise NotImplementedError


class FuzzySpace(EnumeratedSpace):
    """All fuzzy sets over a carrier with values in a lattice."""

    kind = "fuzzy"

    def _build(self, code: int) -> FuzzySet:
        row = self.values_matrix[code]
        names = self.value_lattice.elements
        return FuzzySet(self.carrier, self.value_lattice, tuple(names[v] for v in row))

    def code(self, obj: FuzzySet) -> int:
        if obj.carrier != self.carrier or obj.lattice != self.value_lattice:
            raise LatticeError("fuzzy set does not belong to this space")
        idx = [self.value_lattice.index(v) for v in obj.values]
        return self.code_of_indices(idx)


class CrispSpace(EnumeratedSpace):
    """All subsets of a carrier, coded as bitmasks via a two-point chain."""

    kind = "crisp"

    def __init__(self, carrier: Carrier):
        super().__init__(carrier, chain(2))

    def _build(self, code: int) -> frozenset[str]:
        return frozenset(p for t, p in enumerate(self.carrier.points) if code >> t & 1)

    def code(self, obj) -> int:
        s = self.carrier.subset(obj)
        return sum(1 << self.carrier.index(p) for p in s)


@lru_cache(maxsize=256)
def fuzzy_space(carrier: Carrier, lattice: FiniteLattice) -> FuzzySpace:
    return FuzzySpace(carrier, lattice)


@lru_cache(maxsize=256)
def crisp_space(carrier: Carrier) -> CrispSpace:
    return CrispSpace(carrier)


def space_for(kind: str, carrier: Carrier, lattice: FiniteLattice | None) -> EnumeratedSpace:
    if kind == "crisp":
        return crisp_space(carrier)
    if kind == "fuzzy":
        if lattice is None:
            raise LatticeError("a fuzzy domain needs a membership lattice")
        return fuzzy_space(carrier, lattice)
    raise LatticeError(f"unknown domain kind {kind!r}")
