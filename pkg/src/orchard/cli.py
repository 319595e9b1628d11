"""Command line interface: ``orchard {color,check,cocycle,stats,verify}``.

Exit codes: 0 success, 2 parse error, 3 non-generic input, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter

from orchard.configio import load_configuration
from orchard.errors import BudgetError, NonGenericError, ParseError
from orchard.geometry import Configuration, is_generic, orchard_coloring, random_generic_configuration
from orchard.svg import render_svg
from orchard.verify import MAX_N, uniqueness_table

EXIT_PARSE = 2
EXIT_NONGENERIC = 3
EXIT_BUDGET = 4

DEFAULT_MAX_N = 12


def default_box(n: int) -> int:
    return 10 * n * n


def _load(args) -> Configuration:
    config = load_configuration(args.input)
    if config.n > args.max_n:
        raise BudgetError(f"{config.n} points exceed --max-n {args.max_n}")
    return config


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_color(args) -> int:
    config = _load(args)
    if args.format == "svg" and config.dimension != 2:
        raise ParseError(f"svg output needs d = 2, input has d = {config.dimension}")
    report = orchard_coloring(config, check=True)
    part = report.partition
    if args.format == "json":
        _emit(json.dumps(part.to_json()))
    elif args.format == "svg":
        _emit(render_svg(config, part, lines=args.lines))
    else:
        first, other = part.classes()
        lines = [f"# n={config.n} d={config.dimension} classes={len(first)}+{len(other)}"]
        lines += [f"{k} {'A' if part.sign(k) > 0 else 'B'}" for k in range(config.n)]
        _emit("\n".join(lines))
    return 0


def cmd_check(args) -> int:
    config = _load(args)
    result = is_generic(config)
    if args.format == "json":
        _emit(json.dumps({"generic": result.generic,
                          "witness": list(result.witness) if result.witness else None}))
    elif result.generic:
        _emit(f"generic: {config.n} points in dimension {config.dimension}")
    else:
        _emit(f"not generic: points {list(result.witness)} are affinely dependent")
    return 0 if result.generic else EXIT_NONGENERIC


def cmd_cocycle(args) -> int:
    config = _load(args)
    report = orchard_coloring(config)
    if args.format == "json":
        _emit(json.dumps(report.to_json()))
        return 0
    lines = [f"# n={report.n} l={report.l} kind={report.kind.name.lower()} prefactor={report.prefactor:+d}"]
    for y, z, v in report.to_json()["cocycle"]:
        lines.append(f"{y} {z} {'+' if v > 0 else '-'}")
    first, other = report.partition.classes()
    lines.append("class_of_0: " + " ".join(map(str, first)))
    lines.append("other: " + " ".join(map(str, other)))
    _emit("\n".join(lines))
    return 0


def split_histogram(n: int, d: int, trials: int, seed: int, box: int | None = None,
                    max_tries: int = 10_000) -> dict[str, int]:
    """Counts of unordered class-size splits ``"c+(n-c)"`` (c the smaller class).

    Trial ``t`` draws from its own generator seeded by ``(seed, t)``, so the
    histogram does not depend on how trials are scheduled.
    """
    if n < d + 1:
        raise ValueError(f"need n >= d + 1, got n={n}, d={d}")
    if trials < 1:
        raise ValueError("trials must be positive")
    box = default_box(n) if box is None else box
    if box < n:
        raise BudgetError(f"box {box} is below the documented minimum n = {n}")
    counts = Counter()
    for t in range(trials):
        rng = random.Random(f"{seed}/{t}")
        config = random_generic_configuration(rng, n, d, box, max_tries)
        first, other = orchard_coloring(config).partition.classes()
        small = min(len(first), len(other))
        counts[small] += 1
    return {f"{c}+{n - c}": counts[c] for c in range(n // 2 + 1)}


def cmd_stats(args) -> int:
    box = default_box(args.n) if args.box is None else args.box
    hist = split_histogram(args.n, args.d, args.trials, args.seed, box)
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "d": args.d, "trials": args.trials,
                          "seed": args.seed, "box": box, "splits": hist}))
    else:
        lines = [f"# n={args.n} d={args.d} trials={args.trials} seed={args.seed} box=[0,{box}]"]
        lines += [f"{k} {v}" for k, v in hist.items()]
        _emit("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    if args.n_max > MAX_N:
        raise BudgetError(f"--n-max {args.n_max} exceeds the budget {MAX_N}")
    rows = uniqueness_table(args.n_max)
    if args.format == "json":
        _emit(json.dumps(rows))
    else:
        lines = ["n l solution_dimension orchard_in_span exotic_detected"]
        for r in rows:
            lines.append(f"{r['n']} {r['l']} {r['solution_dimension']} "
                         f"{str(r['orchard_in_span']).lower()} {str(r['exotic_detected']).lower()}")
        _emit("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orchard", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="configuration file (.json, or .csv)")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                       help=f"refuse inputs with more points (default {DEFAULT_MAX_N})")

    p = sub.add_parser("color", help="two-color a generic configuration")
    add_input(p)
    p.add_argument("--format", choices=["text", "json", "svg"], default="text")
    p.add_argument("--lines", action="store_true", help="svg: draw the lines through point pairs")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check", help="test genericity")
    add_input(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cocycle", help="print the orchard cocycle and partition")
    add_input(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("stats", help="histogram of class-size splits over random configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, default=None,
                   help="coordinates are integers in [0, box] (default 10 n^2, minimum n)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="count equivariant homomorphisms for small n")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonGenericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
