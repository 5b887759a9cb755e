"""Command-line interface.

Exit codes are a stable contract:
  0  success / all requested checks passed
  1  a verification failed (CR verdict, array mismatch, failed bound, ...)
  2  input problem (unknown id, malformed file or rational, bad flags)
  3  a resource guard refused the computation

Guards can be overridden with CRCODES_MAX_SYNDROMES, CRCODES_MAX_VECTORS,
CRCODES_MAX_COUNT_OPS, CRCODES_MAX_ENUM_DIM or the corresponding flags.
Reports are byte-deterministic for a fixed configuration; timings are
only included when --timings is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import atlas, codecore, cosetgraph, designcheck, limits as limits_mod, lloydgate, spectra
from .errors import CatalogError, CRCodesError, DomainError, FormatError, ResourceError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

_PARAM_NAMES = ("q", "m", "r", "i", "u", "c", "k", "g", "ell", "l", "ma", "mb", "n", "h")


def _dump(doc, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        _render(doc, stream)


def _render(doc, stream, indent=0) -> None:
    pad = " " * indent
    if isinstance(doc, dict):
        for key, val in doc.items():
            if isinstance(val, (dict, list)) and val:
                stream.write(f"{pad}{key}:\n")
                _render(val, stream, indent + 2)
            else:
                stream.write(f"{pad}{key}: {val}\n")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)):
                _render(item, stream, indent)
                stream.write("\n" if indent == 0 else "")
            else:
                stream.write(f"{pad}- {item}\n")
    else:
        stream.write(f"{pad}{doc}\n")


def _parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed rational {text!r}") from exc


def _ia_doc(ia) -> dict | None:
    if ia is None:
        return None
    return {"brace": str(ia), "b": list(ia.bs), "c": list(ia.cs)}


def _collect_params(args) -> dict:
    params = {}
    for name in _PARAM_NAMES:
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    if getattr(args, "base", None):
        params["base"] = args.base
    if getattr(args, "file", None):
        params["file"] = args.file
    return params


def _limits_from_args(args) -> limits_mod.Limits:
    base = limits_mod.from_env()
    overrides = {}
    if args.max_syndromes is not None:
        overrides["max_syndromes"] = args.max_syndromes
    if args.max_vectors is not None:
        overrides["max_vectors"] = args.max_vectors
    if args.max_count_ops is not None:
        overrides["max_count_ops"] = args.max_count_ops
    if overrides:
        from dataclasses import replace
        base = replace(base, **overrides)
    return base


# ---------------------------------------------------------------------------
# atlas commands
# ---------------------------------------------------------------------------


def cmd_atlas_list(args) -> int:
    entries = atlas.list_entries(rho=args.rho, q=args.q_filter,
                                 feasible_only=args.feasible_only)
    if args.json:
        _dump({"entries": entries}, True)
    else:
        for e in entries:
            ia = e["expected_ia"]
            brace = "{%s; %s}" % (",".join(map(str, ia[0])), ",".join(map(str, ia[1]))) if ia else "-"
            flag = " external" if e["external"] else ""
            print(f"{e['id']:6s} {brace:40s} {e['title']}{flag}")
    return EXIT_OK


def cmd_atlas_build(args, limits) -> int:
    params = _collect_params(args)
    code, expected = atlas.build(args.id, params, limits)
    cr, ia = spectra.is_completely_regular(code, limits=limits)
    match = cr and ia == expected
    doc = {
        "id": atlas.resolve(args.id).id,
        "params": {k: v for k, v in sorted(params.items())},
        "n": code.n,
        "kind": "linear" if code.is_linear else "explicit",
        "size": code.size,
        "completely_regular": cr,
        "computed_ia": _ia_doc(ia),
        "expected_ia": _ia_doc(expected),
        "match": match,
    }
    if args.out:
        codecore.save_code(code, args.out)
        doc["code_file"] = args.out
    if args.report:
        cls = spectra.classify(code, limits=limits)
        with open(args.report, "w") as fh:
            json.dump(cls.as_json_dict(), fh, sort_keys=True, indent=1)
            fh.write("\n")
        doc["report_file"] = args.report
    _dump(doc, args.json)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_atlas_regress(args, limits) -> int:
    if args.all_feasible or not args.ids:
        pairs = None
    else:
        pairs = []
        for eid in args.ids:
            entry = atlas.resolve(eid)
            for params in entry.defaults:
                pairs.append((entry.id, dict(params)))
    report = atlas.regress(pairs, include_controls=args.all_feasible or not args.ids,
                           limits=limits, jobs=args.jobs)
    doc = report.as_json_dict(with_timings=args.timings)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")
    if args.json:
        _dump(doc, True)
    else:
        for r in report.results:
            status = "pass" if r.ok else "FAIL"
            ia = str(r.computed_ia) if r.computed_ia else "-"
            print(f"{status}  {r.id:6s} {str(r.params):40s} {ia:45s} {r.detail}")
        print(f"{'OK' if report.ok else 'FAILED'}: {sum(r.ok for r in report.results)}"
              f"/{len(report.results)} entries")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_atlas_manifest(args) -> int:
    atlas.write_manifest(args.out)
    print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def cmd_verify(args, limits) -> int:
    code = codecore.load_code(args.file)
    doc: dict = {"file": args.file, "n": code.n, "q": code.field.q, "size": code.size}
    failed = False
    wants_classify = args.classify or not (args.cr or args.lloyd or args.designs or args.graph)

    cls = None
    if args.cr or args.lloyd or wants_classify or args.graph:
        cls = spectra.classify(code, limits=limits)

    if args.cr or wants_classify:
        doc["completely_regular"] = cls.completely_regular
        doc["ia"] = _ia_doc(cls.ia)
        if args.cr and not cls.completely_regular:
            failed = True
    if wants_classify:
        doc["classification"] = cls.as_json_dict()
    if args.lloyd:
        if cls.completely_regular and cls.betas is not None:
            battery = lloydgate.run_battery(cls.ia, cls.betas, code.size)
            doc["lloyd"] = battery.as_json_dict()
            if not battery.passed:
                failed = True
        elif cls.betas is not None:
            report = lloydgate.lloyd_roots(code.n, code.field.q, cls.betas)
            doc["lloyd"] = {"lloyd_roots": {"passed": report.passed,
                                            "roots": list(report.roots)}}
            if not report.passed:
                failed = True
        else:
            doc["lloyd"] = {"note": "code is not UP in the wide sense; no packing parameters"}
            failed = True
    if args.designs:
        if args.weight is None or args.strength is None:
            raise FormatError("--designs needs --weight and --strength")
        witness = designcheck.verify_design(code, args.weight, args.strength, limits)
        doc["design"] = witness.as_json_dict() if witness else None
        if witness is None:
            failed = True
    if args.graph:
        graph = cosetgraph.build_coset_graph(code, limits)
        report = cosetgraph.is_distance_regular(graph, limits)
        doc["graph"] = {
            "vertices": graph.num_vertices,
            "distance_regular": report.is_drg,
            "diameter": report.diameter,
            "mode": report.mode,
            "ia": _ia_doc(report.ia),
        }
        if cls is not None and cls.completely_regular:
            agree = (report.is_drg and report.ia is not None
                     and tuple(report.ia.bs) == tuple(cls.ia.bs)
                     and tuple(report.ia.cs) == tuple(cls.ia.cs))
            doc["graph"]["matches_code_ia"] = agree
            if not agree:
                failed = True
        if args.graph_out:
            fmt = "json" if args.graph_out.endswith(".json") else "dot"
            with open(args.graph_out, "wb") as fh:
                fh.write(cosetgraph.export(graph, fmt))
            doc["graph"]["export_file"] = args.graph_out
    _dump(doc, args.json)
    return EXIT_MISMATCH if failed else EXIT_OK


# ---------------------------------------------------------------------------
# bounds command
# ---------------------------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.rho1:
        b, c, n = args.rho1
        report = lloydgate.rho1_bounds(b, c, n)
        _dump(report.as_json_dict(), args.json)
        return EXIT_OK if report.ok else EXIT_MISMATCH
    if args.lloyd_roots:
        n = int(args.lloyd_roots[0])
        q = int(args.lloyd_roots[1])
        betas = tuple(_parse_rational(t) for t in args.lloyd_roots[2:])
        if not betas:
            raise FormatError("--lloyd-roots needs n q beta0 [beta1 ...]")
        report = lloydgate.lloyd_roots(n, q, betas)
        _dump({"passed": report.passed, "roots": list(report.roots), "rho": report.rho},
              args.json)
        return EXIT_OK if report.passed else EXIT_MISMATCH
    raise FormatError("bounds needs --rho1 or --lloyd-roots")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_limit_flags(parser) -> None:
    parser.add_argument("--max-syndromes", type=int, default=None)
    parser.add_argument("--max-vectors", type=int, default=None)
    parser.add_argument("--max-count-ops", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crcodes",
        description="Exact verification toolkit for completely regular codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p_atlas = sub.add_parser("atlas", help="construction catalog")
    asub = p_atlas.add_subparsers(dest="atlas_command", required=True)

    p_list = asub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--rho", type=int, default=None)
    p_list.add_argument("--q", dest="q_filter", type=int, default=None)
    p_list.add_argument("--feasible-only", action="store_true")
    p_list.add_argument("--json", action="store_true")

    p_build = asub.add_parser("build", help="build one entry and verify its array")
    p_build.add_argument("id")
    for name in _PARAM_NAMES:
        p_build.add_argument(f"--{name}", type=int, default=None)
    p_build.add_argument("--base", type=str, default=None)
    p_build.add_argument("--file", type=str, default=None,
                         help="codeword file for external entries")
    p_build.add_argument("-o", "--out", type=str, default=None, help="write code JSON here")
    p_build.add_argument("--report", type=str, default=None,
                         help="write the classification report here")
    _add_limit_flags(p_build)

    p_reg = asub.add_parser("regress", help="run the catalog regression")
    p_reg.add_argument("ids", nargs="*", help="entry ids (default: all feasible)")
    p_reg.add_argument("--all-feasible", action="store_true")
    p_reg.add_argument("--jobs", type=int, default=1)
    p_reg.add_argument("--timings", action="store_true")
    p_reg.add_argument("--out", type=str, default=None)
    _add_limit_flags(p_reg)

    p_man = asub.add_parser("manifest", help="write the atlas.json manifest")
    p_man.add_argument("-o", "--out", type=str, default="atlas.json")

    p_verify = sub.add_parser("verify", help="analyze a code file")
    p_verify.add_argument("file")
    p_verify.add_argument("--cr", action="store_true", help="complete regularity verdict")
    p_verify.add_argument("--classify", action="store_true", help="full classification")
    p_verify.add_argument("--lloyd", action="store_true", help="Lloyd-type test battery")
    p_verify.add_argument("--designs", action="store_true")
    p_verify.add_argument("--weight", type=int, default=None)
    p_verify.add_argument("--strength", type=int, default=None)
    p_verify.add_argument("--graph", action="store_true", help="coset graph checks")
    p_verify.add_argument("--graph-out", type=str, default=None)
    _add_limit_flags(p_verify)

    p_bounds = sub.add_parser("bounds", help="arithmetic-only necessary conditions")
    p_bounds.add_argument("--rho1", nargs=3, type=int, metavar=("B", "C", "N"))
    p_bounds.add_argument("--lloyd-roots", nargs="+", metavar="ARG",
                          help="n q beta0 [beta1 ...] with rationals as p/q")
    p_bounds.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "atlas":
            if args.atlas_command == "list":
                return cmd_atlas_list(args)
            if args.atlas_command == "build":
                return cmd_atlas_build(args, _limits_from_args(args))
            if args.atlas_command == "regress":
                return cmd_atlas_regress(args, _limits_from_args(args))
            if args.atlas_command == "manifest":
                return cmd_atlas_manifest(args)
        if args.command == "verify":
            return cmd_verify(args, _limits_from_args(args))
        if args.command == "bounds":
            return cmd_bounds(args)
        raise FormatError(f"unknown command {args.command!r}")
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FormatError, DomainError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CRCodesError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
