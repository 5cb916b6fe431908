"""Command-line entry point.

Exit codes: 0 success, 1 campaign aborted on an artifact bug, 2 parse or
validation error, 3 invalid gluing, 4 degree bound too small, 5 Wilf
counterexample found by genus enumeration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .affine import read_generator_file
from .affine_gluing import audit_affine_gluing, default_bound, order_from, read_ray_spec
from .errors import BoundTooSmall, SemigroupError
from .gaps import gap_analysis
from .gluing import audit_gluing, frobenius_by_formula, glue, validate_gluing
from .harness import CampaignAborted, CampaignConfig, run_campaign
from .numerical import construct, parse_generators, wilf_report
from .orders import MonomialOrder

EXIT_OK, EXIT_ABORT, EXIT_PARSE, EXIT_GLUING, EXIT_BOUND, EXIT_WILF = 0, 1, 2, 3, 4, 5
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _emit(text: str, path=None):
    if not text.endswith("\n"):
        text += "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def _numerical(text):
    try:
        return construct(parse_generators(text))
    except SemigroupError as exc:
        raise UsageError(str(exc)) from None


# -- ns ------------------------------------------------------------------------

def cmd_ns_analyze(args):
    S = _numerical(args.generators)
    report = wilf_report(S)
    if args.json:
        _emit(_dumps({**S.summary(), "wilf": report.to_dict()}), args.output)
        return EXIT_OK
    rel = ">=" if report.wilf_holds else "<"
    lines = [
        f"generators: {S}",
        f"multiplicity: {S.multiplicity}",
        f"embedding_dimension: {S.embedding_dimension}",
        f"apery: {list(S.apery)}",
        f"frobenius: {S.frobenius}",
        f"genus: {S.genus}",
        f"gaps: {list(S.gaps)}",
        f"sporadic_count: {S.sporadic_count}",
        f"pseudo_frobenius: {list(S.pseudo_frobenius)}",
        f"type: {S.type}",
        f"wilf: p*n = {report.lhs} {rel} F+1 = {report.rhs} "
        f"({'holds' if report.wilf_holds else 'fails'}, margin {report.margin})",
        f"froberg: (t+1)*n = {(report.t + 1) * report.n} vs F+1 = {report.rhs} "
        f"({'holds' if report.froberg_holds else 'fails'})",
        f"symmetric: {report.symmetric}",
    ]
    _emit("\n".join(lines), args.output)
    return EXIT_OK


def cmd_ns_glue(args):
    A, B = _numerical(args.A), _numerical(args.B)
    spec = validate_gluing(A, B, args.k1, args.k2)
    if isinstance(spec, list):
        sys.stderr.write("invalid gluing:\n" + "".join(f"  - {v}\n" for v in spec))
        if args.json:
            _emit(_dumps({"valid": False, "violations": spec}), args.output)
        return EXIT_GLUING
    if args.audit:
        audit = audit_gluing(spec)
        data = {"valid": True, **audit.to_dict()}
        if args.csv:
            buf = io.StringIO()
            row = audit.csv_row()
            writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
            writer.writeheader()
            writer.writerow(row)
            _emit(buf.getvalue(), args.output)
            return EXIT_OK
    else:
        C = glue(spec)
        data = {"valid": True, **spec.to_dict(), "C": str(C),
                "F_formula": frobenius_by_formula(spec), "F_direct": C.frobenius}
        data["formula_ok"] = data["F_formula"] == data["F_direct"]
    if args.json:
        _emit(_dumps(data), args.output)
        return EXIT_OK
    lines = [f"C = {data['C']}", f"F(formula) = {data['F_formula']}",
             f"F(direct) = {data['F_direct']}", f"formula_ok = {data['formula_ok']}"]
    if args.audit:
        for key, value in data.items():
            if key.endswith("_ok") and key != "formula_ok":
                lines.append(f"{key} = {value}")
        for name in ("wilf_A", "wilf_B", "wilf_C"):
            w = data[name]
            lines.append(f"{name}: {w['lhs']} >= {w['rhs']} {w['wilf_holds']}")
        lines.append(f"n_C = {data['n_C']}")
    _emit("\n".join(lines), args.output)
    return EXIT_OK


# -- affine --------------------------------------------------------------------

def _load_affine(path):
    try:
        return read_generator_file(path)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except SemigroupError as exc:
        raise UsageError(str(exc)) from None


def _weights(text):
    return None if text is None else [int(x) for x in text.split(",")]


def cmd_affine_analyze(args):
    S = _load_affine(args.file)
    try:
        order = MonomialOrder.make(args.order, S.dim, _weights(args.weights))
    except SemigroupError as exc:
        raise UsageError(str(exc)) from None
    bound = args.bound if args.bound is not None else default_bound(S, order)
    result = gap_analysis(S, order, args.mode, bound)
    _emit(_dumps({"semigroup": S.to_dict(), "analysis": result.to_dict()}), args.output)
    return EXIT_OK


def cmd_affine_glue(args):
    try:
        data = json.loads(Path(args.spec).read_text(encoding="utf-8"))
        spec = read_ray_spec(data)
        order = order_from({**data, **({"order": args.order} if args.order else {})},
                           spec.A.dim)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    bound = args.bound if args.bound is not None else data.get("bound", 25)
    mode = args.mode or data.get("mode", "paper-literal")
    audit = audit_affine_gluing(spec, order, bound, mode)
    _emit(audit.to_json(), args.output)
    return EXIT_OK


# -- campaign ------------------------------------------------------------------

def cmd_campaign(args):
    try:
        cfg = CampaignConfig.from_text(Path(args.config).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.workers is not None:
        cfg.workers = args.workers
    if args.seed is not None:
        cfg.seed = args.seed
    if args.output:
        cfg.output = args.output
    try:
        report = run_campaign(cfg)
    except CampaignAborted as exc:
        bundle = _dumps(exc.bundle)
        if cfg.output:
            Path(cfg.output).with_suffix(".bundle.json").write_text(bundle, encoding="utf-8")
        sys.stderr.write(f"campaign aborted: {exc}\n")
        sys.stdout.write(bundle)
        return EXIT_ABORT
    _emit(report.to_json(timing=not args.no_timing), cfg.output)
    if report.wilf_counterexamples:
        sys.stderr.write("WILF CONJECTURE COUNTEREXAMPLE FOUND\n")
        return EXIT_WILF
    return EXIT_OK if report.ok else EXIT_ABORT


def cmd_replay(args):
    try:
        bundle = json.loads(Path(args.bundle).read_text(encoding="utf-8"))
        argv = bundle["argv"]
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"unreadable bundle: {exc}") from None
    return main(argv)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wilfglue", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="group", required=True)

    ns = sub.add_parser("ns", help="numerical semigroups").add_subparsers(dest="cmd", required=True)
    p = ns.add_parser("analyze", help="Apery set, Frobenius number, gaps, Wilf report")
    p.add_argument("generators")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ns_analyze)

    p = ns.add_parser("glue", help="glue two numerical semigroups")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--audit", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true", help="with --audit: one CSV row")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ns_glue)

    af = sub.add_parser("affine", help="affine semigroups").add_subparsers(dest="cmd", required=True)
    p = af.add_parser("analyze", help="gap analysis of a generator file")
    p.add_argument("file")
    p.add_argument("--order", default="graded-lex")
    p.add_argument("--weights", help="comma-separated weights for weighted-graded")
    p.add_argument("--mode", default="paper-literal")
    p.add_argument("--bound", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_affine_analyze)

    p = af.add_parser("glue", help="audit a ray gluing spec (JSON)")
    p.add_argument("--spec", required=True)
    p.add_argument("--order")
    p.add_argument("--mode")
    p.add_argument("--bound", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_affine_glue)

    p = sub.add_parser("campaign", help="run a key=value campaign config")
    p.add_argument("config")
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int, help=f"default {DEFAULT_SEED} unless the config sets one")
    p.add_argument("-o", "--output")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock stats")
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("replay", help="rerun a violation reproduction bundle")
    p.add_argument("bundle")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BoundTooSmall as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BOUND
    except (UsageError, SemigroupError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


def run():
    sys.exit(main())
