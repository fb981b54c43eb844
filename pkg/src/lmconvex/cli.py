"""Batch command line.

Loads lattices, fuzzy sets, degree structures, and carrier maps from JSON
files, runs checks and constructions, and emits a machine-readable report
on standard output with a one-line human summary on standard error.

The machine report is byte-identical across repeated runs on identical
inputs: its ``timings`` field carries deterministic work counters (domain
sizes, check counts), while wall-clock times go to standard error only.

Exit codes: 0 every verdict positive, 1 a check failed (the witness is in
the report), 2 usage, format, or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .constructions import (generate_from_subbase, generate_from_subbase_bruteforce,
                            product_structure, quotient_by_partition,
                            quotient_structure, substructure)
from .convex_structures import (StructureMap, check_lm_fuzzy, check_m_fuzzifying,
                                cut_lower_structure, cut_upper_structure, is_coarser,
                                meet_structures, structure_from_lower_cuts,
                                structure_from_upper_cuts)
from .errors import BudgetError, FormatError, LmconvexError
from .functors import FunctorContext, adjunction_check, iota, omega
from .fuzzy_sets import FuzzySet, cut_lower, cut_strict, cut_upper, decompose
from .gallery import GALLERY, gallery_build, gallery_names
from .io import (dump_space_map, dump_structure_map, load_fuzzy_set,
                 load_lattice_report, load_space_map, load_structure_map,
                 resolve_lattice)
from .lattice_core import check_beta_meet_hypothesis
from .morphisms import (SpacePair, cpf_cut_equivalence, is_convex_to_convex, is_cpf,
                        is_cpf_via_preimage, is_quotient_function)
from .theorems import CHECKS, SuiteConfig

SCHEMA_VERSION = 1

# Which public library operations each verb reaches (coverage is tested).
VERB_OPERATIONS: dict[str, tuple[str, ...]] = {
    "check-lattice": ("verify_lattice", "is_distributive", "meet_family", "join_family",
                      "wedge_below", "op_wedge_below", "beta", "alpha",
                      "check_beta_meet_hypothesis"),
    "check-structure": ("check_lm_fuzzy", "check_m_fuzzifying", "check_l_convexity",
                        "check_classical", "meet_structures", "is_coarser"),
    "cuts": ("cut_lower", "cut_upper", "cut_strict", "decompose",
             "cut_lower_structure", "cut_upper_structure",
             "structure_from_lower_cuts", "structure_from_upper_cuts"),
    "generate": ("generate_from_subbase", "generate_from_subbase_bruteforce"),
    "quotient": ("quotient_structure", "quotient_by_partition", "is_quotient_function"),
    "substructure": ("substructure",),
    "product": ("product_structure",),
    "check-cpf": ("is_cpf", "is_cpf_via_preimage", "preimage_structure",
                  "is_convex_to_convex", "cpf_cut_equivalence",
                  "forward_image", "backward_image"),
    "omega": ("omega",),
    "iota": ("iota", "iota_subbase"),
    "adjoint-check": ("adjunction_check", "cpf_transfer", "lower_cuts_up_directed"),
    "gallery": ("residuum", "interval_degree_structure", "upper_set_structure",
                "fuzzy_convex_sublattice_family"),
    "theorems": ("run_suite", "wedge_below_oracle", "op_wedge_below_oracle",
                 "hull", "restricted_hull_identity"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmconvex",
        description="finite-model checks and constructions for graded convexity structures")
    parser.add_argument("--version", action="version", version=f"lmconvex {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-lattice", help="validate order data from a lattice file")
    p.add_argument("file")

    p = sub.add_parser("check-structure", help="run the axiom checker on degree map files")
    p.add_argument("files", nargs="+")
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive subfamily oracle")

    p = sub.add_parser("cuts", help="cuts of a fuzzy set or of a degree map")
    p.add_argument("file")
    p.add_argument("--level", default=None,
                   help="one level; omitted for every level plus a cut round trip")

    p = sub.add_parser("generate", help="least valid structure above a subbase file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the enumeration of all finer structures")

    p = sub.add_parser("quotient", help="push a structure forward along a surjection")
    p.add_argument("structure")
    p.add_argument("map", help="carrier map file, or a partition file with a blocks key")

    p = sub.add_parser("substructure", help="restrict a structure to part of its carrier")
    p.add_argument("structure")
    p.add_argument("points", nargs="+")

    p = sub.add_parser("product", help="product of two or more structure files")
    p.add_argument("structures", nargs="+")
    p.add_argument("--budget", type=int, default=3 ** 9)

    p = sub.add_parser("check-cpf", help="degree-preservation predicates for a map between structures")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")

    p = sub.add_parser("omega", help="lift a crisp-domain structure to a fuzzy domain")
    p.add_argument("structure")
    p.add_argument("--membership", required=True, help="membership lattice (name or file)")

    p = sub.add_parser("iota", help="project a fuzzy-domain structure onto the crisp domain")
    p.add_argument("structure")

    p = sub.add_parser("adjoint-check", help="hom-set transposition report for a map")
    p.add_argument("crisp_source")
    p.add_argument("fuzzy_target")
    p.add_argument("map")

    p = sub.add_parser("gallery", help="list or emit the stock example structures")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--literal-example-2-3", action="store_true", dest="literal",
                   help="use the degenerate printed reading of the upper-set degree")

    p = sub.add_parser("theorems", help="run the full property suite")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--lattices", default="chain2,chain3,diamond")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--budget", type=int, default=3 ** 9)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--literal-example-2-3", action="store_true", dest="literal")
    p.add_argument("--only", default=None,
                   help="comma-separated subset of checks to run")
    return parser


def _report(verb: str, inputs: dict, verdict: bool, witnesses: list, timings: dict,
            extra: dict | None = None) -> dict:
    body = {
        "schema_version": SCHEMA_VERSION,
        "verb": verb,
        "inputs": inputs,
        "verdict": verdict,
        "witnesses": witnesses,
        "timings": timings,
    }
    if extra:
        body.update(extra)
    return body


def _emit(report: dict, summary: str, start: float | None = None) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))
    if start is not None:
        summary = f"{summary} [{time.perf_counter() - start:.2f}s]"
    print(summary, file=sys.stderr)


def _witnesses(cert) -> list:
    out = []
    for v in cert.violations:
        out.append({"axiom": v.axiom, "witness": [_render(w) for w in v.witness]})
    return out


def _render(obj):
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, FuzzySet):
        return {p: obj(p) for p in obj.carrier.points}
    if isinstance(obj, tuple):
        return [_render(x) for x in obj]
    return obj


def _structure_payload(structure: StructureMap) -> dict:
    return dump_structure_map(structure, "inline", "inline")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    start = time.perf_counter()
    try:
        return _dispatch(args, start)
    except (FormatError, BudgetError, LmconvexError) as exc:
        _emit(_report(args.verb, {}, False, [str(exc)], {}, {"error": str(exc)}),
              f"error: {exc}", start)
        return 2


def _dispatch(args: argparse.Namespace, start: float) -> int:
    verb = args.verb

    if verb == "check-lattice":
        report = load_lattice_report(args.file)
        payload = report.to_dict()
        if report.ok:
            payload["beta_meet_hypothesis"] = check_beta_meet_hypothesis(report.lattice)
        _emit(_report(verb, {"file": args.file}, report.ok,
                      [] if report.ok else [payload["diagnostic"]],
                      {"elements": report.element_count}, {"lattice": payload}),
              f"{args.file}: {'valid lattice' if report.ok else 'invalid'}", start)
        return 0 if report.ok else 1

    if verb == "check-structure":
        structures = [load_structure_map(f) for f in args.files]
        verdicts = []
        witnesses: list = []
        for path, structure in zip(args.files, structures):
            checker = check_lm_fuzzy if structure.kind == "fuzzy" else check_m_fuzzifying
            cert = checker(structure, exhaustive_families=args.oracle)
            verdicts.append(cert.verdict)
            if not cert.verdict:
                witnesses.append({"file": path, "violations": _witnesses(cert)})
        extra: dict = {"verdicts": dict(zip(args.files, verdicts))}
        if len(structures) > 1:
            met = meet_structures(structures)
            meet_checker = check_lm_fuzzy if met.kind == "fuzzy" else check_m_fuzzifying
            extra["meet"] = {
                "structure": _structure_payload(met),
                "valid": meet_checker(met).verdict,
                "coarser_than_each": all(is_coarser(met, s) for s in structures),
            }
        verdict = all(verdicts)
        _emit(_report(verb, {"files": list(args.files)}, verdict, witnesses,
                      {"domain_size": structures[0].space().size}, extra),
              f"{len(structures)} structure(s): {'valid' if verdict else 'invalid'}", start)
        return 0 if verdict else 1

    if verb == "cuts":
        return _run_cuts(args, start)

    if verb == "generate":
        subbase = load_structure_map(args.file)
        generated = generate_from_subbase(subbase)
        agree = True
        if args.oracle:
            agree = generated == generate_from_subbase_bruteforce(subbase)
        _emit(_report(verb, {"file": args.file}, agree, [],
                      {"domain_size": subbase.space().size},
                      {"structure": _structure_payload(generated),
                       "oracle_agrees": agree if args.oracle else None}),
              f"generated least structure above {args.file}", start)
        return 0 if agree else 1

    if verb == "quotient":
        structure = load_structure_map(args.structure)
        blocks = _maybe_partition(args.map)
        if blocks is not None:
            f, out = quotient_by_partition(structure, blocks)
        else:
            f = load_space_map(args.map)
            out = quotient_structure(structure, f)
        quotient_ok = is_quotient_function(SpacePair(f, structure, out)).holds
        _emit(_report(verb, {"structure": args.structure, "map": args.map},
                      quotient_ok, [], {"domain_size": out.space().size},
                      {"structure": _structure_payload(out),
                       "projection": dump_space_map(f)}),
              "quotient structure computed", start)
        return 0 if quotient_ok else 1

    if verb == "substructure":
        structure = load_structure_map(args.structure)
        out = substructure(structure, args.points)
        _emit(_report(verb, {"structure": args.structure, "points": sorted(args.points)},
                      True, [], {"domain_size": out.space().size},
                      {"structure": _structure_payload(out)}),
              "substructure computed", start)
        return 0

    if verb == "product":
        factors = [load_structure_map(p) for p in args.structures]
        out, projections = product_structure(factors, budget=args.budget)
        _emit(_report(verb, {"structures": list(args.structures)}, True, [],
                      {"domain_size": out.space().size},
                      {"structure": _structure_payload(out),
                       "projections": [dump_space_map(p) for p in projections]}),
              "product structure computed", start)
        return 0

    if verb == "check-cpf":
        return _run_check_cpf(args, start)

    if verb == "omega":
        structure = load_structure_map(args.structure)
        membership = resolve_lattice(args.membership, args.structure)
        ctx = FunctorContext.create(membership, structure.m)
        out = omega(ctx, structure)
        _emit(_report(verb, {"structure": args.structure, "membership": args.membership},
                      True, [], {"domain_size": out.space().size},
                      {"structure": _structure_payload(out)}),
              "lifted to the fuzzy domain", start)
        return 0

    if verb == "iota":
        structure = load_structure_map(args.structure)
        ctx = FunctorContext.create(structure.lattice, structure.m)
        out = iota(ctx, structure)
        _emit(_report(verb, {"structure": args.structure}, True, [],
                      {"domain_size": out.space().size},
                      {"structure": _structure_payload(out)}),
              "projected onto the crisp domain", start)
        return 0

    if verb == "adjoint-check":
        crisp = load_structure_map(args.crisp_source)
        fuzzy = load_structure_map(args.fuzzy_target)
        f = load_space_map(args.map)
        ctx = FunctorContext.create(fuzzy.lattice, fuzzy.m)
        report = adjunction_check(ctx, f, crisp, fuzzy)
        _emit(_report(verb,
                      {"crisp_source": args.crisp_source, "fuzzy_target": args.fuzzy_target,
                       "map": args.map},
                      report.implication_holds, [],
                      {"domain_size": fuzzy.space().size},
                      {"crisp_side": report.crisp_side, "fuzzy_side": report.fuzzy_side}),
              f"transposition: crisp={report.crisp_side} fuzzy={report.fuzzy_side}", start)
        return 0 if report.implication_holds else 1

    if verb == "gallery":
        if args.action == "list":
            entries = {name: GALLERY[name].description for name in gallery_names()}
            _emit(_report(verb, {"action": "list"}, True, [], {"entries": len(entries)},
                          {"entries": entries}),
                  f"{len(entries)} gallery entries", start)
            return 0
        if not args.name:
            raise FormatError("gallery emit needs an entry name")
        built = gallery_build(args.name, literal=args.literal)
        if isinstance(built, StructureMap):
            payload = _structure_payload(built)
        else:
            payload = {"members": [_render(m) for m in
                                   sorted(built, key=lambda s: s.values)]}
        _emit(_report(verb, {"action": "emit", "name": args.name}, True, [],
                      {}, {"entry": payload}),
              f"emitted {args.name}", start)
        return 0

    if verb == "theorems":
        config = SuiteConfig(
            lattices=tuple(x.strip() for x in args.lattices.split(",") if x.strip()),
            max_points=args.max_points,
            seed=args.seed,
            budget=args.budget,
            oracle=args.oracle,
            literal_upper_sets=args.literal,
        )
        only = None if args.only is None else {x.strip() for x in args.only.split(",")}
        if only is not None:
            known = {name for name, _ in CHECKS}
            unknown = only - known
            if unknown:
                raise FormatError(
                    f"unknown checks {sorted(unknown)}; available: {sorted(known)}")
        results = [fn(config) for name, fn in CHECKS if only is None or name in only]
        for r in results:
            print(r.line(), file=sys.stderr)
        verdict = all(r.passed for r in results)
        _emit(_report(verb, {"lattices": sorted(config.lattices),
                             "max_points": config.max_points, "seed": config.seed},
                      verdict,
                      [r.name for r in results if not r.passed],
                      {"checks": len(results)},
                      {"checks": [{"name": r.name, "passed": r.passed,
                                   "detail": r.detail} for r in results]}),
              "all checks passed" if verdict else "some checks failed", start)
        return 0 if verdict else 1

    raise FormatError(f"unknown verb {verb!r}")


def _run_cuts(args: argparse.Namespace, start: float) -> int:
    try:
        structure = load_structure_map(args.file)
    except FormatError:
        structure = None
    if structure is not None:
        return _structure_cuts(args, structure, start)
    a_set = load_fuzzy_set(args.file)
    report = decompose(a_set)
    levels = [args.level] if args.level else list(a_set.lattice.elements)
    payload = {
        "cuts": {level: {"lower": sorted(cut_lower(a_set, level)),
                         "upper": sorted(cut_upper(a_set, level)),
                         "strict": sorted(cut_strict(a_set, level))}
                 for level in levels},
        "decomposition_ok": report.ok,
    }
    _emit(_report("cuts", {"file": args.file, "level": args.level}, report.ok, [],
                  {"carrier": len(a_set.carrier)}, payload),
          f"cuts of {args.file}", start)
    return 0 if report.ok else 1


def _structure_cuts(args: argparse.Namespace, structure: StructureMap,
                    start: float) -> int:
    m = structure.m
    lower_levels = ([args.level] if args.level
                    else [a for a in m.elements if a != m.bottom])
    upper_range = m.alpha(m.bottom).members
    payload: dict = {"lower_cuts": {}, "upper_cuts": {}}
    lower_family = {}
    upper_family = {}
    for level in lower_levels:
        cut = cut_lower_structure(structure, level)
        lower_family[level] = cut
        payload["lower_cuts"][level] = [_render(x) for x in sorted(cut, key=_sort_key)]
    for level in ([args.level] if args.level else sorted(upper_range)):
        if level not in upper_range:
            continue
        cut = cut_upper_structure(structure, level)
        upper_family[level] = cut
        payload["upper_cuts"][level] = [_render(x) for x in sorted(cut, key=_sort_key)]
    verdict = True
    if args.level is None and structure.kind == "fuzzy":
        # rebuilding from the complete cut families must reproduce the map
        try:
            round_trip = (structure_from_lower_cuts(m, lower_family) == structure
                          and structure_from_upper_cuts(m, upper_family) == structure)
        except LmconvexError as exc:
            round_trip = False
            payload["round_trip_error"] = str(exc)
        payload["cut_round_trip"] = round_trip
        verdict = round_trip
    _emit(_report("cuts", {"file": args.file, "level": args.level}, verdict, [],
                  {"domain_size": structure.space().size}, payload),
          f"cuts of {args.file}", start)
    return 0 if verdict else 1


def _sort_key(obj):
    if isinstance(obj, frozenset):
        return tuple(sorted(obj))
    return obj.values


def _maybe_partition(path: str) -> list[list[str]] | None:
    """Blocks from a partition file, or None when it is not one."""
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError):
        return None
    if isinstance(data, dict) and isinstance(data.get("blocks"), list):
        return [[str(x) for x in block] for block in data["blocks"]]
    return None


def _run_check_cpf(args: argparse.Namespace, start: float) -> int:
    source = load_structure_map(args.source)
    target = load_structure_map(args.target)
    f = load_space_map(args.map)
    pair = SpacePair(f, source, target)
    direct = is_cpf(pair)
    payload: dict = {"preserving": direct.holds}
    if not direct.holds:
        payload["witness"] = _render(direct.witness)
    if f.is_surjective and source.kind == "fuzzy":
        payload["via_preimage"] = is_cpf_via_preimage(pair).via_preimage
    payload["cut_levels_agree"] = cpf_cut_equivalence(pair).consistent
    payload["convex_to_convex"] = is_convex_to_convex(pair).holds
    _emit(_report("check-cpf", {"source": args.source, "target": args.target,
                                "map": args.map},
                  direct.holds, [] if direct.holds else [_render(direct.witness)],
                  {"target_domain": target.space().size}, payload),
          f"degree preserving: {direct.holds}", start)
    return 0 if direct.holds else 1


if __name__ == "__main__":
    sys.exit(main())
