"""Command line interface: ``gtlab <subcommand>``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bounds, kernels
from .errors import CapExceeded, GammaUndefined
from .extremal import (
    EvenSpec,
    OddSpec,
    build_t_even,
    build_t_odd,
    closed_count_even,
    closed_count_odd,
)
from .forest import ForestError, parse_forest, serialize
from .oracle import brute_gamma_t
from .sweep import compare_figure_families, emit_report, sweep
from .tdp import dp_gamma_t, list_gamma_t_sets
from .treegen import gen_trees

EXIT_USAGE = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_compute(args) -> int:
    f = parse_forest(_read(args.file))
    gamma_t, count = dp_gamma_t(f)
    report = bounds.evaluate_bounds(f.n, gamma_t, count)
    print(f"n {f.n}")
    print(f"gamma_t {gamma_t}")
    print(f"count {count}")
    print(json.dumps(report.to_json(), indent=2))
    return 0


def cmd_enumerate(args) -> int:
    f = parse_forest(_read(args.file))
    if args.method == "brute":
        _, count, family = brute_gamma_t(f)
        if count > args.cap:
            raise CapExceeded(f"{count} γ_t-sets exceed the listing cap {args.cap}", count)
    else:
        family = list_gamma_t_sets(f, cap=args.cap)
    if args.json:
        print(json.dumps(family.to_json()))
    else:
        for s in family.sets:
            print(" ".join(map(str, s)))
    return 0


def cmd_sweep(args) -> int:
    report = sweep(args.n_lo, args.n_hi, args.jobs, spot_check=args.oracle_spot_check)
    text = emit_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for v in report.violations:
        kind = "conjecture counterexample" if v.bound == "b1" else "THEOREM VIOLATION"
        print(
            f"{kind}: {v.bound} fails at n={v.n} gamma_t={v.gamma_t} count={v.count}\n"
            f"  witness level sequence: {v.witness}\n"
            + "".join(f"  {line}\n" for line in serialize(v.witness.to_forest()).splitlines()),
            file=sys.stderr,
            end="",
        )
    for t in report.spot_mismatches:
        print(f"oracle mismatch: {t}", file=sys.stderr)
    print(
        f"{report.trees_processed} trees, {len(report.counterexamples)} counterexamples, "
        f"{len(report.theorem_violations)} theorem violations, "
        f"{report.spot_checks} oracle spot checks, {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return report.exit_code()


def cmd_extremal(args) -> int:
    ells = [int(x) for x in args.ells.split(",") if x.strip()]
    if args.parity == "even":
        spec = EvenSpec(tuple(ells))
        tree, closed = build_t_even(spec), closed_count_even(spec)
    else:
        spec = OddSpec(tuple(ells))
        tree, closed = build_t_odd(spec), closed_count_odd(spec)
    gamma_t, count = dp_gamma_t(tree)
    sys.stdout.write(serialize(tree))
    print(f"# gamma_t {gamma_t} closed_form {closed} dp {count}")
    return 0 if closed == count else 1


def cmd_gen_trees(args) -> int:
    out = sys.stdout
    for t in gen_trees(args.n):
        out.write(f"{t}\n")
    return 0


def cmd_families(args) -> int:
    print("gamma_t max_count best_family_count attained")
    for row in compare_figure_families(args.n):
        best = "-" if row.best_family_count is None else row.best_family_count
        print(f"{row.gamma_t} {row.max_count} {best} {str(row.attained).lower()}")
    return 0


def cmd_beta(args) -> int:
    beta = bounds.solve_beta(args.bits)
    print(f"beta {beta.value}")
    lo, hi = bounds.frac_decimal(beta.lo), bounds.frac_decimal(beta.hi)
    print(f"bracket [{lo}, {hi}] width {float(beta.width):.3e}")
    print(f"residual {beta.residual:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtlab",
        description="Minimum total dominating sets of forests and bound verification over trees.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="γ_t, ♯γ_t and the bound report of a forest")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="list every minimum total dominating set")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--method", choices=["dp", "brute"], default="dp")
    p.add_argument("--json", action="store_true", help="print a sorted JSON array")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="check every tree in a range of orders")
    p.add_argument("--n-lo", type=int, default=2)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.add_argument("--oracle-spot-check", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="build a hub-of-units tree")
    p.add_argument("--parity", choices=["even", "odd"], required=True)
    p.add_argument("--ells", required=True, help="comma-separated leaf counts, e.g. 2,3")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("gen-trees", help="canonical level sequences of all trees of order N")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gen_trees)

    p = sub.add_parser("families", help="compare sweep maxima with the hub-of-units families")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("beta", help="the base of the exponential bound")
    p.add_argument("--bits", type=int, default=64)
    p.set_defaults(func=cmd_beta)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    logging.getLogger(__name__).debug("kernel backend: %s", kernels.BACKEND)
    try:
        return args.func(args)
    except (ForestError, GammaUndefined, CapExceeded, ValueError, OSError) as exc:
        print(f"gtlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
