"""Command line: ``canstrat run | gen | bench``.

Exit codes: 0 success, 1 input error, 2 oracle divergence.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bench import run_bench
from .complex import DegenerateSimplex, EmptyComplex, build_complex
from .generators import FAMILIES, GenSpec, maximal_simplices
from .io import ParseError, format_input, format_tsv, make_report, parse_input
from .stratify import canonical_stratification, oracle_divergences


def _levels(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError("empty level range")
    return range(a, b + 1)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_run(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        t0 = time.perf_counter()
        c = build_complex(parse_input(text))
        t1 = time.perf_counter()
    except (OSError, ParseError, DegenerateSimplex, EmptyComplex, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    if args.oracle:
        strat, bad = oracle_divergences(c, strict=args.strict, first_only=True)
    else:
        strat, bad = canonical_stratification(c, strict=args.strict), []
    t2 = time.perf_counter()
    timings = {"build_ms": 1000 * (t1 - t0), "stratify_ms": 1000 * (t2 - t1)}

    if args.format == "tsv":
        _write(format_tsv(strat), args.output)
    else:
        report = make_report(strat, poset=args.poset, hom=args.hom, timings=timings)
        _write(report.to_json(timings=not args.no_timings), args.output)

    if bad:
        d = bad[0]
        verts = " ".join(str(x) for x in c.tables[d.simplex.dim][d.simplex.index])
        print(f"oracle divergence ({d.kind}) at level {d.level}: simplex {verts}",
              file=sys.stderr)
        return 2
    return 0


def cmd_gen(args) -> int:
    try:
        simplices = maximal_simplices(GenSpec(args.family, args.k))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    header = f"# {args.family} level {args.k}\n"
    _write(header + format_input(simplices), args.output)
    return 0


def cmd_bench(args) -> int:
    try:
        report = run_bench(args.family, args.levels, trials=args.trials, parallel=args.parallel)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.table())
    if args.json:
        _write(json.dumps(report.to_dict(), indent=2) + "\n", args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canstrat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="stratify a complex given as maximal simplices")
    r.add_argument("file")
    r.add_argument("--format", choices=("json", "tsv"), default="json")
    r.add_argument("--poset", action="store_true", help="include strata poset relations")
    r.add_argument("--hom", action="store_true", help="include hom-class counts")
    r.add_argument("--no-strict", dest="strict", action="store_false",
                   help="skip the link-connectivity check in codim 2/3")
    r.add_argument("--oracle", action="store_true",
                   help="replay against the brute-force homology test")
    r.add_argument("--no-timings", action="store_true", help="omit timings from JSON")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_run)

    g = sub.add_parser("gen", help="write a generated complex in input format")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("-k", type=int, default=0, help="level")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time stratification across levels")
    b.add_argument("family", choices=FAMILIES)
    b.add_argument("--levels", type=_levels, required=True, metavar="A..B")
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--parallel", action="store_true", help="run trials in worker processes")
    b.add_argument("--json", metavar="FILE", help="also write the report as JSON")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
