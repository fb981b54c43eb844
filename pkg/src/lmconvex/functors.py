"""Translations between crisp-domain and fuzzy-domain degree structures.

``omega`` turns a crisp-domain structure into a fuzzy-domain one by meeting
the degrees of all threshold cuts; ``iota`` goes back by generating from
the subbase that joins, over all levels, the degrees of fuzzy sets cutting
to a given subset.  On valid structures the round trip iota(omega(S))
reproduces S exactly, while omega(iota(C)) dominates C pointwise; the
transfer and transposition reports make the remaining translation laws
executable.

Both translations require the membership lattice to satisfy the beta-meet
law (the minimal family of a meet is the intersection of the minimal
families); a context object carries that certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .constructions import generate_from_subbase
from .convex_structures import StructureMap
from .errors import PreconditionError
from .fuzzy_sets import Carrier, FuzzySet, SpaceMap, cut_lower
from .lattice_core import FiniteLattice, check_beta_meet_hypothesis
from .morphisms import SpacePair, is_cpf
from .spaces import crisp_space, fuzzy_space


@dataclass(frozen=True)
class FunctorContext:
    """Membership lattice, value lattice, and the beta-meet certificate.

    The membership lattice must also have distinct bounds: with a single
    element there is no characteristic-function embedding of subsets, and
    the exact round trip genuinely fails.
    """

    l: FiniteLattice
    m: FiniteLattice
    certified: bool

    @classmethod
    def create(cls, l: FiniteLattice, m: FiniteLattice) -> "FunctorContext":
        return cls(l, m, check_beta_meet_hypothesis(l) and len(l) >= 2)

    def require(self) -> None:
        if not self.certified:
            raise PreconditionError(
                "membership lattice fails the beta-meet law or is trivial; "
                "translations refuse to run")


def _cut_code_table(ctx: FunctorContext, carrier: Carrier) -> np.ndarray:
    """Crisp code of every threshold cut: rows fuzzy-set codes, columns levels."""
    fspace = fuzzy_space(carrier, ctx.l)
    cspace = crisp_space(carrier)
    vm = fspace.values_matrix
    n = len(ctx.l)
    table = np.empty((fspace.size, n), dtype=np.int64)
    for a in range(n):
        member = ctx.l.leq[a, vm]           # (size, k) level below each value
        table[:, a] = member @ cspace.powers
    return table


def omega(ctx: FunctorContext, crisp_structure: StructureMap) -> StructureMap:
    """Fuzzy-domain structure meeting the degrees of all threshold cuts."""
    ctx.require()
    if crisp_structure.kind != "crisp":
        raise PreconditionError("omega starts from a crisp-domain structure")
    if crisp_structure.m != ctx.m:
        raise PreconditionError("structure values in a different lattice than the context")
    carrier = crisp_structure.carrier
    table = _cut_code_table(ctx, carrier)
    crisp_codes = crisp_structure.as_codes()
    out = kernels.level_meet(table, crisp_codes, ctx.m.meet_table, ctx.m.top_index)
    return StructureMap.from_codes(fuzzy_space(carrier, ctx.l), ctx.m, out)


def iota_subbase(ctx: FunctorContext, fuzzy_structure: StructureMap) -> StructureMap:
    """Crisp-domain subbase joining degrees over all cut representations.

    A subset receives the join, over levels and over fuzzy sets whose
    threshold cut at that level is the subset, of the fuzzy degrees.
    """
    ctx.require()
    if fuzzy_structure.kind != "fuzzy":
        raise PreconditionError("iota starts from a fuzzy-domain structure")
    if fuzzy_structure.lattice != ctx.l or fuzzy_structure.m != ctx.m:
        raise PreconditionError("structure lattices differ from the context")
    carrier = fuzzy_structure.carrier
    cspace = crisp_space(carrier)
    table = _cut_code_table(ctx, carrier)
    codes = fuzzy_structure.as_codes()
    m = ctx.m
    phi = np.full(cspace.size, m.bottom_index, dtype=np.int64)
    for b_code in range(table.shape[0]):
        for a in range(table.shape[1]):
            u = table[b_code, a]
            phi[u] = m.join_table[phi[u], codes[b_code]]
    return StructureMap.from_codes(cspace, m, phi)


def iota(ctx: FunctorContext, fuzzy_structure: StructureMap) -> StructureMap:
    """Crisp-domain structure generated by the cut-representation subbase."""
    return generate_from_subbase(iota_subbase(ctx, fuzzy_structure))


# ---------------------------------------------------------------------------
# translation laws as reports


@dataclass(frozen=True)
class TransferReport:
    """Both sides of the preservation transfer along omega."""

    crisp_preserving: bool
    fuzzy_preserving: bool

    @property
    def agree(self) -> bool:
        return self.crisp_preserving == self.fuzzy_preserving


def cpf_transfer(ctx: FunctorContext, f: SpaceMap, source: StructureMap,
                 target: StructureMap) -> TransferReport:
    """Preservation between crisp structures versus between their omega images."""
    crisp = is_cpf(SpacePair(f, source, target)).holds
    fuzzy = is_cpf(SpacePair(f, omega(ctx, source), omega(ctx, target))).holds
    return TransferReport(crisp, fuzzy)


@dataclass(frozen=True)
class AdjunctionReport:
    """Hom-set transposition: crisp side against iota, fuzzy side against omega."""

    crisp_side: bool
    fuzzy_side: bool

    @property
    def implication_holds(self) -> bool:
        return (not self.crisp_side) or self.fuzzy_side


def adjunction_check(ctx: FunctorContext, f: SpaceMap, crisp_source: StructureMap,
                     fuzzy_target: StructureMap) -> AdjunctionReport:
    """Transpose a map across the translation pair and record both verdicts.

    If the map preserves degrees from the crisp source into iota of the
    fuzzy target, it must preserve degrees from omega of the crisp source
    into the fuzzy target.
    """
    crisp = is_cpf(SpacePair(f, crisp_source, iota(ctx, fuzzy_target))).holds
    fuzzy = is_cpf(SpacePair(f, omega(ctx, crisp_source), fuzzy_target)).holds
    return AdjunctionReport(crisp, fuzzy)


def lower_cuts_up_directed(a_set: FuzzySet, level: str) -> bool:
    """Whether the threshold cuts at levels minimally above a level are up-directed.

    The family collects the cuts at every level whose minimal family
    contains the given level; any two members must share a superset inside
    the family.
    """
    lat = a_set.lattice
    family = {cut_lower(a_set, c) for c in lat.elements if level in lat.beta(c)}
    for s1 in family:
        for s2 in family:
            if not any(s1 <= s3 and s2 <= s3 for s3 in family):
                return False
    return True
