"""Command line entry point: ``nsr verify`` and ``nsr function``."""

from __future__ import annotations

import argparse
import sys

from .errors import NSRError
from .verify import (
    CONJECTURE,
    FUNCTION_TAGS,
    PROVEN,
    CheckSpec,
    build_function,
    dumps_report,
    emit_report,
    parse_param,
    run_check,
)


def _params(items):
    out = {}
    for item in items or ():
        key, value = parse_param(item)
        out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nsr", description="Exact checks for non-stationary Ruijsenaars functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named identity check")
    v.add_argument("--check", required=True,
                   help="check name, or 'all', 'proven', 'conjecture' for a suite")
    v.add_argument("--n", type=int, default=2, help="rank N (default 2)")
    v.add_argument("--order", type=int, default=None, help="truncation order D")
    v.add_argument("--sigma-order", type=int, default=None, help="sigma order for dual tables")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="fix a parameter, e.g. q=1/3 or s=1,1/3 (repeatable)")
    v.add_argument("--out", default=None, help="JSON report path (CSV summary written alongside)")
    v.add_argument("--csv", default=None, help="explicit CSV summary path")

    f = sub.add_parser("function", help="emit a named series as canonical JSON")
    f.add_argument("--tag", required=True, choices=FUNCTION_TAGS)
    f.add_argument("--n", type=int, default=2)
    f.add_argument("--order", type=int, default=3)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--param", action="append", metavar="KEY=VALUE")
    f.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


def _suite(name: str):
    if name == "all":
        return PROVEN + CONJECTURE
    if name == "proven":
        return PROVEN
    if name == "conjecture":
        return CONJECTURE
    return (name,)


def cmd_verify(args) -> int:
    params = tuple(sorted(_params(args.param).items()))
    names = _suite(args.check)
    specs = []
    for name in names:
        N = 3 if name == "theta-threebody" and args.n < 3 and len(names) > 1 else args.n
        specs.append(CheckSpec(name, N, args.order, args.sigma_order, args.seed, args.trials, params))
    specs = [s.resolved() for s in specs]
    reports = [run_check(s) for s in specs]
    for r in reports:
        line = f"{r.status:18s} {r.spec.name} N={r.spec.N} D={r.spec.D} ({r.ms:.0f} ms)"
        if r.tolerance is not None:
            line += f" residual={r.residual} tolerance={r.tolerance}"
        print(line, file=sys.stderr)
        for w in r.witnesses[:3]:
            print(f"    witness {w[0]}: {w[1]} != {w[2]}", file=sys.stderr)
    if args.out or args.csv:
        return emit_report(reports, args.out, args.csv)
    sys.stdout.write(dumps_report(reports) + "\n")
    return emit_report(reports)


def cmd_function(args) -> int:
    series = build_function(args.tag, args.n, args.order, args.seed, _params(args.param))
    text = series.dumps() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_function(args)
    except (ValueError, NSRError) as exc:
        print(f"nsr: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
