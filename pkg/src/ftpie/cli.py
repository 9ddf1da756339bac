"""Command line interface: ``ftpie validate|mcs|prob|sweep|solar-demo``.

Exit status is 0 on success, 1 when a valid tree cannot be analysed by the
requested method, and 2 for usage, I/O and parse/validation errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from .cutsets import mcs
from .errors import AnalysisError, FaultTreeError
from .ftio import parse_ft
from .model import natural_key
from .pie import top_probability
from .solar import compare_solar

EXIT_OK, EXIT_ANALYSIS, EXIT_USAGE = 0, 1, 2

# schema of ``prob --json`` output
REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "method": {"type": "string", "enum": ["pie", "enum", "mc"]},
        "time": {"type": "number"},
        "probability": {"type": "number", "minimum": 0, "maximum": 1},
        "terms": {"type": "integer", "minimum": 1},
        "samples": {"type": "integer", "minimum": 1},
        "std_error": {"type": "number", "minimum": 0},
    },
    "required": ["method", "time", "probability"],
    "additionalProperties": False,
}


class _UsageError(Exception):
    pass


def format_prob(p: float) -> str:
    """12 significant digits, positional notation; scientific below 1e-6."""
    if p == 0:
        return "0.000000000000"
    if abs(p) < 1e-6:
        return f"{p:.11e}"
    decimals = max(0, 11 - math.floor(math.log10(abs(p))))
    return f"{p:.{decimals}f}"


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_ft(text)


def cmd_validate(args):
    tree = _load(args.file)
    print("ok")
    print(f"{len(tree.events)} events, {len(tree.gates)} gates, top {tree.top}"
          f"{'' if tree.is_coherent else ' (non-coherent)'}", file=sys.stderr)
    return EXIT_OK


def cmd_mcs(args):
    sets = mcs(_load(args.file))
    rows = [sorted(c, key=natural_key) for c in sets]
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            print(" ".join(row))
    return EXIT_OK


def _analyse(tree, t, args):
    return top_probability(tree, t, args.method, samples=args.samples, seed=args.seed, workers=args.workers)


def cmd_prob(args):
    report = _analyse(_load(args.file), args.time, args)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(format_prob(report.probability))
    return EXIT_OK


def cmd_sweep(args):
    if args.steps < 1:
        raise _UsageError("--steps must be >= 1")
    tree = _load(args.file)
    times = np.linspace(args.start, args.stop, args.steps + 1)
    rows = [(repr(float(t)), format_prob(_analyse(tree, float(t), args).probability)) for t in times]
    try:
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["time", "probability"])
            writer.writerows(rows)
    except OSError as exc:
        raise _UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from None
    return EXIT_OK


def cmd_solar(args):
    if args.rates is None:
        rates = [1e-5] * 14
    else:
        try:
            rates = [float(x) for x in args.rates.split(",")]
        except ValueError:
            raise _UsageError("--rates must be 14 comma-separated numbers") from None
    if args.time < 0:
        raise _UsageError("--time must be >= 0")
    try:
        cmp = compare_solar(rates, args.time)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.json:
        print(json.dumps(cmp.__dict__))
        return EXIT_OK
    print(f"time            {args.time!r}")
    print(f"pie             {format_prob(cmp.pie)}   ({cmp.terms} terms)")
    print(f"enum            {format_prob(cmp.enum)}")
    print(f"eq5             {format_prob(cmp.eq5)}")
    print(f"|pie - enum|    {cmp.delta_pie_enum:.3e}")
    print(f"|eq5 - enum|    {cmp.delta_eq5_enum:.3e}")
    return EXIT_OK


def _add_method_args(p):
    p.add_argument("--method", choices=["pie", "enum", "mc"], default="pie")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int, default=1, help=argparse.SUPPRESS)


def build_parser():
    parser = argparse.ArgumentParser(prog="ftpie", description="Static fault tree analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a .ft file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("mcs", help="print minimal cut sets")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mcs)

    p = sub.add_parser("prob", help="top event probability at a mission time")
    p.add_argument("file")
    p.add_argument("--time", type=float, required=True)
    _add_method_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("sweep", help="probability over a time grid, written as CSV")
    p.add_argument("file")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    _add_method_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("solar-demo", help="solar array: PIE vs enumeration vs closed form")
    p.add_argument("--time", type=float, required=True)
    p.add_argument("--rates", help="14 comma-separated failure rates (per hour)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solar)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except AnalysisError as exc:
        print(f"ftpie: analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except (FaultTreeError, _UsageError) as exc:
        print(f"ftpie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ftpie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
