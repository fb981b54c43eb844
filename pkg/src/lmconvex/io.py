"""JSON file formats for lattices, fuzzy sets, degree maps, and carrier maps.

Lattice references inside other files resolve either to a stock name
(chainN, diamond, pentagon) or to a path relative to the referring file.
All loaders raise FormatError with the offending key path.
"""

from __future__ import annotations

import json
from pathlib import Path

from .catalog import named_lattice
from .convex_structures import StructureMap
from .errors import FormatError, LatticeError, LmconvexError
from .fuzzy_sets import Carrier, FuzzySet, SpaceMap
from .lattice_core import FiniteLattice, LatticeReport, verify_lattice


def _read_json(path: str | Path) -> dict:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FormatError(f"{p}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{p}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{p}: top level must be an object")
    return data


def _need(data: dict, key: str, path, kind=None):
    if key not in data:
        raise FormatError(f"{path}: missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"{path}: key {key!r} has the wrong type")
    return value


def load_lattice_report(path: str | Path) -> LatticeReport:
    data = _read_json(path)
    elements = _need(data, "elements", path, list)
    covers = _need(data, "covers", path, list)
    pairs = []
    for i, pair in enumerate(covers):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise FormatError(f"{path}: covers[{i}] must be a [lower, upper] pair")
        pairs.append((str(pair[0]), str(pair[1])))
    return verify_lattice([str(e) for e in elements], pairs)


def load_lattice(path: str | Path) -> FiniteLattice:
    report = load_lattice_report(path)
    if not report.ok:
        raise FormatError(f"{path}: {report.diagnostic.message()}")
    return report.lattice


def resolve_lattice(ref: str, base: str | Path | None = None) -> FiniteLattice:
    """A stock lattice name, or a JSON file path relative to ``base``."""
    try:
        return named_lattice(ref)
    except LatticeError:
        pass
    p = Path(ref)
    if base is not None and not p.is_absolute():
        p = Path(base).parent / p
    if not p.exists():
        raise FormatError(f"lattice reference {ref!r} is neither a stock name nor a file")
    return load_lattice(p)


def dump_lattice(lat: FiniteLattice) -> dict:
    covers = []
    for i, lo in enumerate(lat.elements):
        for j, hi in enumerate(lat.elements):
            if i == j or not lat.leq[i, j]:
                continue
            between = [k for k in range(len(lat))
                       if k not in (i, j) and lat.leq[i, k] and lat.leq[k, j]]
            if not between:
                covers.append([lo, hi])
    return {"elements": list(lat.elements), "covers": sorted(covers)}


def load_fuzzy_set(path: str | Path) -> FuzzySet:
    data = _read_json(path)
    carrier = Carrier(tuple(str(p) for p in _need(data, "carrier", path, list)))
    lattice = resolve_lattice(str(_need(data, "lattice", path)), path)
    values = _need(data, "values", path, dict)
    try:
        return FuzzySet.from_mapping(carrier, lattice,
                                     {str(k): str(v) for k, v in values.items()})
    except LmconvexError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump_fuzzy_set(a_set: FuzzySet, lattice_ref: str) -> dict:
    return {
        "carrier": list(a_set.carrier.points),
        "lattice": lattice_ref,
        "values": {p: a_set(p) for p in a_set.carrier.points},
    }


def load_structure_map(path: str | Path) -> StructureMap:
    data = _read_json(path)
    kind = _need(data, "domain", path, str)
    if kind not in ("crisp", "fuzzy"):
        raise FormatError(f"{path}: domain must be 'crisp' or 'fuzzy'")
    carrier = Carrier(tuple(str(p) for p in _need(data, "carrier", path, list)))
    m = resolve_lattice(str(_need(data, "M", path)), path)
    lattice = None
    if kind == "fuzzy":
        lattice = resolve_lattice(str(_need(data, "L", path)), path)
    default = str(data.get("default", m.bottom))
    entries = {}
    for i, entry in enumerate(_need(data, "entries", path, list)):
        if not isinstance(entry, dict):
            raise FormatError(f"{path}: entries[{i}] must be an object")
        degree = str(_need(entry, "degree", f"{path}: entries[{i}]"))
        raw = _need(entry, "set", f"{path}: entries[{i}]")
        if kind == "crisp":
            if not isinstance(raw, list):
                raise FormatError(f"{path}: entries[{i}].set must be a list of points")
            key = frozenset(str(p) for p in raw)
        else:
            if not isinstance(raw, dict):
                raise FormatError(f"{path}: entries[{i}].set must map points to values")
            key = FuzzySet.from_mapping(carrier, lattice,
                                        {str(k): str(v) for k, v in raw.items()})
        entries[key] = degree
    try:
        return StructureMap(kind, carrier, lattice, m, entries, default=default)
    except LmconvexError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump_structure_map(structure: StructureMap, m_ref: str,
                       l_ref: str | None = None) -> dict:
    entries = []
    for key, degree in structure.sorted_items():
        if structure.kind == "crisp":
            rendered = sorted(key)
        else:
            rendered = {p: key(p) for p in structure.carrier.points}
        entries.append({"set": rendered, "degree": degree})
    out = {
        "domain": structure.kind,
        "carrier": list(structure.carrier.points),
        "M": m_ref,
        "default": structure.default,
        "entries": entries,
    }
    if structure.kind == "fuzzy":
        out["L"] = l_ref if l_ref is not None else "unnamed"
    return out


def load_space_map(path: str | Path) -> SpaceMap:
    data = _read_json(path)
    domain = Carrier(tuple(str(p) for p in _need(data, "domain", path, list)))
    codomain = Carrier(tuple(str(p) for p in _need(data, "codomain", path, list)))
    graph = _need(data, "graph", path, dict)
    try:
        return SpaceMap.from_mapping(domain, codomain,
                                     {str(k): str(v) for k, v in graph.items()})
    except LmconvexError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump_space_map(f: SpaceMap) -> dict:
    return {
        "domain": list(f.domain.points),
        "codomain": list(f.codomain.points),
        "graph": {x: f(x) for x in f.domain.points},
    }
