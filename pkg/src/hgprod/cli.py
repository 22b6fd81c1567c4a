"""hgprod command line: products, counts, isomorphism, law audits, fuzzing.

Exit codes: 0 when the operation succeeds (and any audited law holds),
1 when an audited law is violated (expected for the non-associative kinds)
or hypergraphs are not isomorphic, 2 on usage or input errors.  Structured
output goes to stdout, diagnostics to stderr.  Identical argv, input files
and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checker import (
    GeneratorConfig,
    InfeasibleError,
    LawReport,
    PreconditionError,
    check_associativity,
    check_commutativity,
    check_lemma1,
    counterexample_audit,
    format_fuzz_report,
    format_law_report,
    fuzz_law,
    fuzz_report_dict,
    law_report_dict,
)
from .core import Atom, format_edge, format_label, label_key, validate
from .counting import COUNTABLE_KINDS, verify_count
from .hgio import HgParseError, parse_hg, serialize_hg
from .iso import IsoBoundError, apply_mapping, are_isomorphic
from .products import ProductKind, product

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2

_ALL_KINDS = [k.value for k in ProductKind]
_COUNT_KINDS = sorted(k.value for k in COUNTABLE_KINDS)


class InputError(Exception):
    """File or content problem mapped to exit code 2."""


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        hg = parse_hg(text)
    except HgParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    problem = validate(hg)
    if problem is not None:
        raise InputError(f"{path}: {problem}")
    return hg


def _emit_hg(hg, out: str | None) -> None:
    text = serialize_hg(hg)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _flatten(hg):
    """Rename vertices to v0..vn in canonical order; returns (renamed, legend)."""
    ordered = sorted(hg.vertices, key=label_key)
    mapping = {v: Atom(f"v{i}") for i, v in enumerate(ordered)}
    legend = [f"# v{i} = {format_label(v)}" for i, v in enumerate(ordered)]
    return apply_mapping(hg, mapping), legend


def _print_report(report: LawReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(law_report_dict(report), indent=2))
    else:
        print(format_law_report(report))


def _cmd_product(args) -> int:
    h1 = _load(args.factors[0])
    h2 = _load(args.factors[1])
    result = product(ProductKind(args.kind), h1, h2)
    if args.flatten:
        result, legend = _flatten(result)
        text = "\n".join(legend) + ("\n" if legend else "") + serialize_hg(result)
        if args.output is None:
            sys.stdout.write(text)
        else:
            Path(args.output).write_text(text, encoding="utf-8")
    else:
        _emit_hg(result, args.output)
    return EXIT_OK


def _cmd_count(args) -> int:
    h1 = _load(args.factors[0])
    h2 = _load(args.factors[1])
    kind = ProductKind(args.kind)
    report = verify_count(kind, h1, h2)
    if args.json:
        payload = {"kind": kind.value, "formula_count": report.formula_count}
        if args.verify:
            payload["enumerated_count"] = report.enumerated_count
            payload["agreement"] = report.agreement
        print(json.dumps(payload, indent=2))
    else:
        print(f"kind: {kind.value}")
        print(f"formula_count: {report.formula_count}")
        if args.verify:
            print(f"enumerated_count: {report.enumerated_count}")
            print(f"agreement: {'true' if report.agreement else 'false'}")
    if args.verify and not report.agreement:
        return EXIT_VIOLATED
    return EXIT_OK


def _cmd_iso(args) -> int:
    h1 = _load(args.files[0])
    h2 = _load(args.files[1])
    result = are_isomorphic(h1, h2, max_vertices=args.max_vertices)
    if args.json:
        witness = None
        if result.witness is not None:
            witness = {
                format_label(k): format_label(v)
                for k, v in sorted(result.witness.items(), key=lambda kv: label_key(kv[0]))
            }
        print(
            json.dumps(
                {
                    "isomorphic": result.isomorphic,
                    "nodes_explored": result.nodes_explored,
                    "witness": witness,
                },
                indent=2,
            )
        )
    else:
        print(f"isomorphic: {'true' if result.isomorphic else 'false'}")
        print(f"nodes_explored: {result.nodes_explored}")
        if result.witness is not None:
            for k in sorted(result.witness, key=label_key):
                print(f"map: {format_label(k)} -> {format_label(result.witness[k])}")
    return EXIT_OK if result.isomorphic else EXIT_VIOLATED


def _cmd_assoc(args) -> int:
    a, b, c = (_load(p) for p in args.factors)
    report = check_associativity(ProductKind(args.kind), a, b, c, full_iso=args.full_iso)
    if args.full_iso and report.exists_isomorphism is None:
        print(
            "note: full isomorphism search skipped (vertex bound exceeded)",
            file=sys.stderr,
        )
    _print_report(report, args.json)
    return EXIT_OK if report.psi_is_isomorphism else EXIT_VIOLATED


def _cmd_commut(args) -> int:
    a, b = (_load(p) for p in args.factors)
    report = check_commutativity(ProductKind(args.kind), a, b)
    _print_report(report, args.json)
    return EXIT_OK if report.psi_is_isomorphism else EXIT_VIOLATED


def _cmd_lemma1(args) -> int:
    g = _load(args.factors[0])
    h = _load(args.factors[1])
    try:
        report = check_lemma1(g, h)
    except PreconditionError as exc:
        raise InputError(f"precondition violated: {exc}") from exc
    _print_report(report, args.json)
    return EXIT_OK if report.psi_is_isomorphism else EXIT_VIOLATED


def _cmd_counterexample(args) -> int:
    audit = counterexample_audit()
    if args.json:
        payload = {
            "reports": [law_report_dict(r) for r in audit.reports],
            "witness_edge": format_edge(audit.witness_edge),
            "witness_image": format_edge(audit.witness_image),
        }
        print(json.dumps(payload, indent=2))
    else:
        for report in audit.reports:
            print(format_law_report(report))
            print()
        print(f"witness_edge: {format_edge(audit.witness_edge)}")
        print(f"witness_image_absent_on_right: {format_edge(audit.witness_image)}")
    return EXIT_VIOLATED


def _cmd_fuzz(args) -> int:
    law = {"assoc": "associativity", "commut": "commutativity"}[args.law]
    vertex_min = 1
    size_min = args.edge_size_min
    if args.simple:
        vertex_min = 2
        size_min = max(size_min, 2)
    if size_min > args.max_vertices:
        raise InputError("edge-size-min exceeds max-vertices")
    if args.edge_size_max < size_min:
        raise InputError("empty edge size range")
    cfg = GeneratorConfig(
        seed=args.seed,
        vertex_count=(vertex_min, args.max_vertices),
        edge_count=(1, args.max_edges),
        edge_size=(size_min, args.edge_size_max),
        require_simple=args.simple,
    )
    try:
        report = fuzz_law(ProductKind(args.kind), law, cfg, args.trials, jobs=args.jobs)
    except InfeasibleError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        print(json.dumps(fuzz_report_dict(report), indent=2))
    else:
        print(format_fuzz_report(report))
    return EXIT_OK if report.failure_count == 0 else EXIT_VIOLATED


def _cmd_fmt(args) -> int:
    hg = _load(args.file)
    sys.stdout.write(serialize_hg(hg))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgprod",
        description="Hypergraph products, exact counts, isomorphism and law audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="compute a product of two .hg files")
    p.add_argument("--kind", required=True, choices=_ALL_KINDS)
    p.add_argument("factors", nargs=2, metavar=("A.hg", "B.hg"))
    p.add_argument("-o", "--output", default=None, metavar="OUT.hg")
    p.add_argument("--flatten", action="store_true", help="rename vertices v0..vn with a legend")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("count", help="closed-form edge count, optionally verified")
    p.add_argument("--kind", required=True, choices=_COUNT_KINDS)
    p.add_argument("factors", nargs=2, metavar=("A.hg", "B.hg"))
    p.add_argument("--verify", action="store_true", help="also enumerate and compare")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("iso", help="isomorphism test with witness")
    p.add_argument("files", nargs=2, metavar=("A.hg", "B.hg"))
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("assoc", help="associativity audit of a product kind")
    p.add_argument("--kind", required=True, choices=_ALL_KINDS)
    p.add_argument("factors", nargs=3, metavar=("A.hg", "B.hg", "C.hg"))
    p.add_argument("--full-iso", action="store_true", help="also run the full isomorphism search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_assoc)

    p = sub.add_parser("commut", help="commutativity audit of a product kind")
    p.add_argument("--kind", required=True, choices=_ALL_KINDS)
    p.add_argument("factors", nargs=2, metavar=("A.hg", "B.hg"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_commut)

    p = sub.add_parser("lemma1", help="dirmax vs dirnon edge-set equality audit")
    p.add_argument("factors", nargs=2, metavar=("G.hg", "H.hg"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemma1)

    p = sub.add_parser("counterexample", help="reproduce the built-in non-associativity instance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("fuzz", help="seeded random law audits")
    p.add_argument("--kind", required=True, choices=_ALL_KINDS)
    p.add_argument("--law", required=True, choices=["assoc", "commut"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--edge-size-min", type=int, default=1)
    p.add_argument("--edge-size-max", type=int, default=3)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("fmt", help="canonicalize a .hg file to stdout")
    p.add_argument("file", metavar="FILE.hg")
    p.set_defaults(func=_cmd_fmt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IsoBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
