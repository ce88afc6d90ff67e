"""One test per acceptance criterion; each prints a PASS/FAIL line in the summary."""

import random
import time
from itertools import combinations_with_replacement, product

import pytest

from gtlab import bounds, kernels
from gtlab.extremal import (
    EvenSpec,
    OddSpec,
    best_family_count,
    build_star_union,
    build_t_even,
    build_t_odd,
    closed_count_even,
    closed_count_odd,
    closed_count_odd_difference,
)
from gtlab.forest import disjoint_union
from gtlab.oracle import brute_gamma_t, check_lemma1
from gtlab.sweep import EXIT_OK, sweep
from gtlab.tdp import dp_gamma_t
from gtlab.treegen import gen_trees

from conftest import ACCEPTANCE_LINES, random_forest, star
from oracles import free_tree_count, level_code


def record(k, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def full_sweep():
    start = time.perf_counter()
    report = sweep(2, 16)
    return report, time.perf_counter() - start


def test_criterion_01_oracle_equivalence():
    start = time.perf_counter()
    trees = mismatches = 0
    for n in range(2, 11):
        for t in gen_trees(n):
            f = t.to_forest()
            trees += 1
            mismatches += dp_gamma_t(f) != brute_gamma_t(f)[:2]
    rng = random.Random(1)
    for _ in range(500):
        f = random_forest(rng, max_n=14)
        mismatches += dp_gamma_t(f) != brute_gamma_t(f)[:2]
    elapsed = time.perf_counter() - start
    record(
        1,
        trees == 200 and mismatches == 0 and elapsed < 30,
        f"dp == brute on {trees} trees + 500 random forests, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_02_conjecture_sweep(full_sweep):
    report, single = full_sweep
    start = time.perf_counter()
    parallel = sweep(2, 16, parallelism=8)
    eight = time.perf_counter() - start
    ok = (
        report.trees_processed == sum(free_tree_count(n) for n in range(2, 17))
        and not report.counterexamples
        and report.exit_code() == EXIT_OK
        and parallel == report
        and single < 300
        and eight < 60
    )
    record(
        2,
        ok,
        f"{report.trees_processed} trees n=2..16, {len(report.counterexamples)} b1 violations, "
        f"{single:.1f}s single, {eight:.1f}s with 8 workers, identical reports",
    )


def test_criterion_03_theorem_bounds(full_sweep):
    report, _ = full_sweep
    by_bound = {b: sum(v.bound == b for v in report.violations) for b in ("b2", "b3", "b4")}
    radii = max(
        max(bounds.b2_bracket(r.n, r.gamma_t).radius, bounds.b4_bracket(r.n).radius) for r in report.records
    )
    record(
        3,
        not any(by_bound.values()) and radii < bounds.MARGIN,
        f"violations {by_bound} over the sweep; max certified radius {radii:.1e} < {bounds.MARGIN}",
    )


def test_criterion_04_b3_equality():
    pieces = [t.to_forest() for n in range(2, 7) for t in gen_trees(n)]
    wrong = total = 0
    for r in (1, 2, 3):
        for combo in combinations_with_replacement(range(len(pieces)), r):
            f = disjoint_union(*(pieces[i] for i in combo))
            g, c = dp_gamma_t(f)
            all_k2 = all(pieces[i].n == 2 for i in combo)
            verdict = bounds.b3_thm(f.n, g, c)
            expected = bounds.Verdict.EQUALITY if all_k2 else bounds.Verdict.HOLDS
            wrong += verdict is not expected
            total += 1
    record(4, wrong == 0, f"{total} forests, equality exactly on all-K2 forests ({wrong} wrong)")


def test_criterion_05_star_law():
    bad = [n for n in range(3, 13) if dp_gamma_t(star(n)) != (2, n - 1)]
    record(5, not bad, f"K_1,n-1 gives (2, n-1) for n=3..12; failures {bad}")


def test_criterion_06_star_union():
    bad = [p for p in range(1, 9) if dp_gamma_t(build_star_union(p, 5)) != (2 * p, 4**p)]
    base = 4 ** (1 / 5)
    record(
        6,
        not bad and round(base, 4) == 1.3195,
        f"parts 1..8 give (2p, 4^p), failures {bad}; 4^(1/5) = {base:.6f}",
    )


def test_criterion_07_extremal_closed_forms():
    start = time.perf_counter()
    specs = bad = 0
    for k in range(1, 5):
        for ells in product(range(1, 5), repeat=k):
            even, odd = EvenSpec(ells), OddSpec(ells)
            specs += 1
            bad += dp_gamma_t(build_t_even(even)) != (2 * k, closed_count_even(even))
            bad += dp_gamma_t(build_t_odd(odd)) != (2 * k + 1, closed_count_odd(odd))
            bad += closed_count_odd(odd) != closed_count_odd_difference(odd)
    elapsed = time.perf_counter() - start
    record(7, bad == 0 and elapsed < 10, f"{specs} specs per family, {bad} mismatches, {elapsed:.2f}s")


def test_criterion_08_beta():
    beta = bounds.solve_beta()
    err = abs(float(beta.value) - 1.4865)
    record(
        8,
        err <= 5e-5 and beta.residual < 1e-12,
        f"beta = {beta.value:.15f}, |beta - 1.4865| = {err:.1e}, residual {beta.residual:.1e}",
    )


def test_criterion_09_tree_counts():
    expected = [1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]
    got = [sum(1 for _ in gen_trees(n)) for n in range(3, 17)]
    prufer_ok = True
    for n in range(3, 11):
        # the full product is out of reach at n=10 (and for the Python backend
        # beyond n=7); the non-decreasing sequences still reach every class
        monotone = n >= 10 or (kernels.BACKEND == "python" and n >= 8)
        codes = kernels.prufer_codes(n, monotone)
        prufer_ok &= set(codes) == {level_code(t.level_sequence) for t in gen_trees(n)}
    record(
        9,
        got == expected and prufer_ok,
        f"counts n=3..16 {got}; Prüfer bucketing agrees for n=3..10: {prufer_ok}",
    )


def test_criterion_10_lemma1():
    start = time.perf_counter()
    trees = violations = 0
    for n in range(2, 11):
        for t in gen_trees(n):
            size, _ = check_lemma1(t.to_forest())
            trees += 1
            violations += 2 * size > n
    elapsed = time.perf_counter() - start
    record(
        10,
        violations == 0 and elapsed < 60,
        f"{trees} trees n<=10, {violations} with |B| > n/2, {elapsed:.1f}s",
    )


def test_criterion_11_family_attainment(full_sweep):
    report, _ = full_sweep
    checked, beaten, infeasible = 0, [], []
    for r in report.records:
        if r.n <= 14 and r.gamma_t % 2 == 0:
            best = best_family_count(r.n, r.gamma_t)
            checked += 1
            if best is None:
                infeasible.append((r.n, r.gamma_t))
            elif best[0] != r.max_count:
                beaten.append((r.n, r.gamma_t, r.max_count, best[0]))
    beyond = [
        (r.n, r.gamma_t, r.max_count, r.best_family_count)
        for r in report.records
        if r.n > 14 and r.gamma_t % 2 == 0 and r.best_family_count is not None and not r.attained_by_figure_family
    ]
    # exploratory: discrepancies are reported, never failed
    line = (
        f"{'PASS' if not beaten else 'INFO'} criterion 11: {checked} even (n, γ_t) pairs n<=14, "
        f"family beaten at {beaten}, no feasible spec at {infeasible}; "
        f"beyond n=14 (n, γ_t, max, family): {beyond}"
    )
    ACCEPTANCE_LINES.append(line)
    print(line)
