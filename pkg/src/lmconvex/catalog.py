"""Stock lattices and generated lattice families.

Provides the named instances used throughout the test corpus (chains, the
four-element Boolean square, the pentagon) plus the family of downset
lattices of all small posets, which exhausts the distributive lattices at
desk scale.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import LatticeError
from .lattice_core import FiniteLattice


def chain(n: int) -> FiniteLattice:
    """Total order on elements named "0" .. "n-1"."""
    if n < 1:
        raise LatticeError("a chain needs at least one element")
    names = tuple(str(i) for i in range(n))
    leq = np.tril(np.ones((n, n), dtype=bool)).T
    return FiniteLattice(names, leq)


def diamond() -> FiniteLattice:
    """Boolean square: bottom, two incomparable atoms p and q, top."""
    return FiniteLattice.from_cover_pairs(
        ("bot", "p", "q", "top"),
        [("bot", "p"), ("bot", "q"), ("p", "top"), ("q", "top")],
    )


def pentagon() -> FiniteLattice:
    """The five-element non-distributive lattice with a length-3 side."""
    return FiniteLattice.from_cover_pairs(
        ("bot", "a", "c", "b", "top"),
        [("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")],
    )


_ALIASES = {
    "2": ("chain", 2),
    "3": ("chain", 3),
    "bool": ("diamond", None),
    "n5": ("pentagon", None),
}


def named_lattice(name: str) -> FiniteLattice:
    """Resolve a lattice name: chainN (or a bare number), diamond, pentagon."""
    key = name.strip().lower()
    if key in _ALIASES:
        kind, arg = _ALIASES[key]
        return chain(arg) if kind == "chain" else {"diamond": diamond, "pentagon": pentagon}[kind]()
    if key.startswith("chain"):
        try:
            return chain(int(key[5:]))
        except ValueError:
            raise LatticeError(f"bad chain size in lattice name {name!r}") from None
    if key == "diamond":
        return diamond()
    if key == "pentagon":
        return pentagon()
    raise LatticeError(f"unknown lattice name {name!r}")


def lattice_names() -> tuple[str, ...]:
    return ("chain2", "chain3", "chain4", "diamond", "pentagon")


# ---------------------------------------------------------------------------
# downset lattices of small posets


def all_posets(points: int) -> Iterator[np.ndarray]:
    """Every labeled partial order on the given number of points.

    Yields full reflexive boolean matrices.  Brute force over the strict
    part; intended for very small point counts.
    """
    pairs = [(i, j) for i in range(points) for j in range(points) if i != j]
    for bits in range(1 << len(pairs)):
        rel = np.eye(points, dtype=bool)
        for t, (i, j) in enumerate(pairs):
            if bits >> t & 1:
                rel[i, j] = True
        ok = True
        for i in range(points):
            for j in range(points):
                if i != j and rel[i, j]:
                    if rel[j, i]:
                        ok = False
                        break
                    for k in range(points):
                        if rel[j, k] and not rel[i, k]:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            yield rel


def downset_lattice(poset_leq: np.ndarray) -> FiniteLattice:
    """Lattice of down-closed subsets of a poset, ordered by inclusion.

    Always distributive; element names encode the subset contents.
    """
    rel = np.asarray(poset_leq, dtype=bool)
    n = rel.shape[0]
    downsets = []
    for bits in range(1 << n):
        closed = True
        for j in range(n):
            if bits >> j & 1:
                for i in range(n):
                    if rel[i, j] and not bits >> i & 1:
                        closed = False
                        break
            if not closed:
                break
        if closed:
            downsets.append(bits)
    names = tuple("d" + "".join(str(i) for i in range(n) if b >> i & 1) for b in downsets)
    m = len(downsets)
    leq = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(m):
            leq[a, b] = downsets[a] & ~downsets[b] == 0
    return FiniteLattice(names, leq)


def downset_lattice_family(max_points: int = 4, max_size: int = 10) -> list[FiniteLattice]:
    """Downset lattices of all posets on up to ``max_points`` points.

    Lattices with more than ``max_size`` elements are dropped.  Labeled
    posets are deduplicated only through the resulting lattice's structural
    equality, so isomorphic copies with different labels do survive; that is
    deliberate, the family is a test corpus, not a classification.
    """
    seen: set[FiniteLattice] = set()
    out: list[FiniteLattice] = []
    for k in range(1, max_points + 1):
        for rel in all_posets(k):
            lat = downset_lattice(rel)
            if len(lat) > max_size:
                continue
            if lat in seen:
                continue
            seen.add(lat)
            out.append(lat)
    return out
