"""Command-line surface: computations, tables, and verification suites.

Exit codes: 0 success, 1 verification or agreement failure, 2 usage or
JSON parse error, 3 structural invariant violation in an input diagram.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import geometry, multiplicity, tl, verify, walled
from .diagrams import InvariantViolation, SetPartitionDiagram, compose
from .halfdiag import HalfDiagram, act
from .multiplicity import one_part

USAGE_ERROR = 2
INVARIANT_ERROR = 3


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _color(text: str, code: str) -> str:
    if os.environ.get("DIAGALG_COLOR") == "1":
        return f"\033[{code}m{text}\033[0m"
    return text


def _load_json(path: str):
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                raw = handle.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}", USAGE_ERROR)
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _CliError(f"invalid JSON in {path}: {exc}", USAGE_ERROR)


def _build(loader, data, what: str):
    try:
        return loader(data)
    except InvariantViolation as exc:
        raise _CliError(f"invalid {what}: {exc}", INVARIANT_ERROR)
    except ValueError as exc:
        raise _CliError(f"malformed {what}: {exc}", USAGE_ERROR)


def _cmd_mult(args) -> int:
    if args.mode == "table":
        top = args.max
        rows = [
            (p, q, r, multiplicity.e_closed(p, q, r))
            for p in range(top + 1)
            for q in range(top + 1)
            for r in range(top + 1)
        ]
        if args.format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer)
            writer.writerow(["p", "q", "r", "E"])
            writer.writerows(rows)
            print(buffer.getvalue(), end="")
        else:
            print(json.dumps([{"p": p, "q": q, "r": r, "E": e} for p, q, r, e in rows]))
        return 0

    if args.p is None or args.q is None or args.r is None:
        raise _CliError("mult needs -p, -q and -r (or the 'table' mode)", USAGE_ERROR)
    p, q, r = args.p, args.q, args.r
    engines = {}
    wanted = ("closed", "e1", "e2", "bvo") if args.engines == "all" else (args.engines,)
    count, solutions = multiplicity.e_lattice(p, q, r)
    degree_pairs = multiplicity.admissible_degree_pairs(p, q, r)
    if "closed" in wanted:
        engines["closed"] = multiplicity.e_closed(p, q, r)
    if "e1" in wanted:
        engines["e1"] = count
    if "e2" in wanted:
        engines["e2"] = multiplicity.e2_lattice(p, q, r)
    if "bvo" in wanted:
        engines["bvo"] = multiplicity.bvo_multiplicity(
            one_part(r), one_part(p), one_part(q), *degree_pairs[0]
        )
    agree = len(set(engines.values())) == 1
    if args.format == "json":
        payload = {"p": p, "q": q, "r": r, "engines": engines, "agree": agree}
        if args.solutions:
            payload["solutions"] = [s.to_json() for s in solutions]
        print(json.dumps(payload))
    else:
        for name, value in engines.items():
            print(f"{name}: {value}")
        if args.solutions:
            for s in solutions:
                print(
                    f"  solution: through_labeled={s.through_labeled} "
                    f"through_unlabeled={s.through_unlabeled} "
                    f"left={s.left_labeled} right={s.right_labeled}"
                )
        verdict = "agree" if agree else "DISAGREE"
        print(_color(verdict, "32" if agree else "31"))
    return 0 if agree else 1


def _cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise _CliError(
            f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)} or 'all'",
            USAGE_ERROR,
        )
    reports = [verify.run_suite(name, args.max) for name in names]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for report in reports:
            line = report.summary()
            print(_color(line, "32" if report.ok else "31"))
            for failure in report.failures[:20]:
                print(f"    {failure}")
            if len(report.failures) > 20:
                print(f"    ... and {len(report.failures) - 20} more")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_compose(args) -> int:
    d1 = _build(SetPartitionDiagram.from_json, _load_json(args.left), "diagram")
    d2 = _build(SetPartitionDiagram.from_json, _load_json(args.right), "diagram")
    try:
        t, d = compose(d1, d2)
    except InvariantViolation as exc:
        raise _CliError(str(exc), INVARIANT_ERROR)
    prefix = "" if t == 0 else ("δ · " if t == 1 else f"δ^{t} · ")
    rendering = f"{prefix}{d.render()}"
    if args.format == "json":
        print(json.dumps({"t": t, "diagram": d.to_json(), "rendering": rendering}))
    else:
        print(rendering)
    return 0


def _cmd_act(args) -> int:
    d = _build(SetPartitionDiagram.from_json, _load_json(args.diagram), "diagram")
    v = _build(HalfDiagram.from_json, _load_json(args.half), "half-diagram")
    try:
        result = act(d, v)
    except InvariantViolation as exc:
        raise _CliError(str(exc), INVARIANT_ERROR)
    if args.format == "json":
        if result.is_zero:
            print(json.dumps({"zero": True}))
        else:
            print(
                json.dumps(
                    {
                        "zero": False,
                        "coeff": result.coeff.to_json(),
                        "half_diagram": result.diagram.to_json(),
                    }
                )
            )
    else:
        print(result.render())
    return 0


def _cmd_walled(args) -> int:
    if args.mode == "index":
        w = _build(walled.WalledHalfDiagram.from_json, _load_json(args.input), "walled half-diagram")
        idx = walled.index_of(w)
        if args.format == "json":
            print(json.dumps({"index": idx.render()}))
        else:
            print(idx.render())
        return 0
    tally = walled.census(args.m, args.n, args.r)
    payload = {idx.render(): count for idx, count in tally.items()}
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for key, count in payload.items():
            print(f"{key}: {count}")
    return 0


def _cmd_geometry(args) -> int:
    summary = geometry.geometry_summary(args.p, args.q, args.r)
    if args.format == "json":
        print(json.dumps(summary))
    else:
        ta, tb, tc = summary["tangent_lengths"]
        print(f"tangent lengths: {ta}, {tb}, {tc}")
        print(f"circle count:    {summary['circle_count']}")
        conic = summary["conic"]
        print(
            f"conic:           {conic['kind']} with a={conic['a']}, c={conic['c']}, "
            f"gap={conic['gap']} -> count {summary['conic_count']}"
        )
        if "parity" in summary:
            parity = summary["parity"]
            print(
                f"parity:          tangents integral {parity['tangents_integral']}, "
                f"side sum even {parity['side_sum_even']}"
            )
    return 0


def _parse_class(text: str) -> tuple[int, int]:
    try:
        degree, _, labels = text.partition(":")
        return int(degree), int(labels)
    except ValueError:
        raise _CliError(f"class argument must look like 'degree:labels', got {text!r}", USAGE_ERROR)


def _cmd_tl(args) -> int:
    if args.mode == "basis":
        basis = tl.tl_basis(args.n, args.r)
        if args.count_only:
            print(len(basis))
        elif args.format == "json":
            print(json.dumps([d.to_json() for d in basis]))
        else:
            for d in basis:
                print(d.render())
        return 0
    m, p = _parse_class(args.left)
    n, q = _parse_class(args.right)
    try:
        left = tl.GrothElement.module_class(m, p)
        right = tl.GrothElement.module_class(n, q)
    except InvariantViolation as exc:
        raise _CliError(str(exc), INVARIANT_ERROR)
    product = tl.groth_multiply(left, right)
    if args.format == "text":
        print(product.render())
    else:
        print(json.dumps(product.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagalg",
        description="Exact diagram combinatorics: composition, module actions, "
        "restriction multiplicities and their geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mult = sub.add_parser("mult", help="restriction multiplicity by several engines")
    mult.add_argument("mode", nargs="?", choices=["table"], help="emit a full grid instead")
    mult.add_argument("-p", type=int)
    mult.add_argument("-q", type=int)
    mult.add_argument("-r", type=int)
    mult.add_argument("--engines", choices=["all", "closed", "e1", "e2", "bvo"], default="all")
    mult.add_argument("--solutions", action="store_true", help="list the system's solutions")
    mult.add_argument("--max", type=int, default=3, help="grid bound for table mode")
    mult.add_argument("--format", choices=["text", "json", "csv"], default="text")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", help="suite name or 'all'")
    ver.add_argument("--max", type=int, default=None, help="override the default sweep bound")
    ver.add_argument("--format", choices=["text", "json"], default="text")

    comp = sub.add_parser("compose", help="compose two diagrams from JSON files")
    comp.add_argument("left")
    comp.add_argument("right")
    comp.add_argument("--format", choices=["text", "json"], default="text")

    actp = sub.add_parser("act", help="act a diagram on a half-diagram from JSON files")
    actp.add_argument("diagram")
    actp.add_argument("half")
    actp.add_argument("--format", choices=["text", "json"], default="text")

    wall = sub.add_parser("walled", help="walled half-diagram index and census")
    wall_sub = wall.add_subparsers(dest="mode", required=True)
    wall_index = wall_sub.add_parser("index", help="index of one walled half-diagram")
    wall_index.add_argument("input")
    wall_index.add_argument("--format", choices=["text", "json"], default="text")
    wall_census = wall_sub.add_parser("census", help="tally walled half-diagrams by index")
    wall_census.add_argument("-m", type=int, required=True)
    wall_census.add_argument("-n", type=int, required=True)
    wall_census.add_argument("-r", type=int, required=True)
    wall_census.add_argument("--format", choices=["text", "json"], default="json")

    geo = sub.add_parser("geometry", help="triangle and conic quantities for one triple")
    geo.add_argument("-p", type=int, required=True)
    geo.add_argument("-q", type=int, required=True)
    geo.add_argument("-r", type=int, required=True)
    geo.add_argument("--format", choices=["text", "json"], default="text")

    tlp = sub.add_parser("tl", help="planar half-diagram basis and class products")
    tl_sub = tlp.add_subparsers(dest="mode", required=True)
    tl_basis = tl_sub.add_parser("basis", help="enumerate the planar basis")
    tl_basis.add_argument("-n", type=int, required=True)
    tl_basis.add_argument("-r", type=int, required=True)
    tl_basis.add_argument("--count-only", action="store_true")
    tl_basis.add_argument("--format", choices=["text", "json"], default="text")
    tl_groth = tl_sub.add_parser("groth", help="multiply two module classes")
    tl_groth.add_argument("--left", required=True, help="class as 'degree:labels'")
    tl_groth.add_argument("--right", required=True, help="class as 'degree:labels'")
    tl_groth.add_argument("--format", choices=["text", "json"], default="json")

    return parser


_HANDLERS = {
    "mult": _cmd_mult,
    "verify": _cmd_verify,
    "compose": _cmd_compose,
    "act": _cmd_act,
    "walled": _cmd_walled,
    "geometry": _cmd_geometry,
    "tl": _cmd_tl,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
