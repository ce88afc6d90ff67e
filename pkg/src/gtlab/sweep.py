"""Exhaustive verification over all trees of a range of orders."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Iterable

from . import bounds, kernels
from .errors import CapExceeded
from .extremal import best_family_count
from .forest import level_parents
from .oracle import ORACLE_CAP, brute_gamma_t
from .treegen import CanonicalTree, Cursor, max_order, partition_range

log = logging.getLogger(__name__)

SPOT_CHECK_EVERY = 100
EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 3
EXIT_THEOREM_VIOLATION = 4

CSV_COLUMNS = ["n", "gamma_t", "max_count", "b1_bound", "ratio", "witness_levelseq", "family_attains"]


@dataclass(frozen=True)
class SweepRecord:
    n: int
    gamma_t: int
    max_count: int
    witness: CanonicalTree
    b1_bound_repr: str
    attained_by_figure_family: bool
    best_family_count: int | None = None
    trees: int = 0


@dataclass(frozen=True)
class Violation:
    bound: str
    n: int
    gamma_t: int
    count: int
    witness: CanonicalTree


@dataclass(frozen=True)
class SweepReport:
    n_range: tuple[int, int]
    records: tuple[SweepRecord, ...]
    violations: tuple[Violation, ...]
    trees_processed: int
    spot_checks: int = 0
    spot_mismatches: tuple[CanonicalTree, ...] = ()
    wall_time: float = field(default=0.0, compare=False)

    @property
    def counterexamples(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.bound == "b1")

    @property
    def theorem_violations(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.bound != "b1")

    def exit_code(self) -> int:
        if self.theorem_violations or self.spot_mismatches:
            return EXIT_THEOREM_VIOLATION
        if self.counterexamples:
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK

    def record(self, n: int, gamma_t: int) -> SweepRecord | None:
        for r in self.records:
            if (r.n, r.gamma_t) == (n, gamma_t):
                return r
        return None


# ---- per-tree work ---------------------------------------------------------


def tree_gamma_count(seq) -> tuple[int, int]:
    """DP on a level sequence; its DFS order reversed puts children first."""
    n = len(seq)
    return kernels.dp_count(level_parents(seq), range(n - 1, -1, -1))


def check_tree(n: int, gamma_t: int, count: int) -> list[str]:
    """Ids of the bounds that ``count`` violates."""
    failed = []
    if not bounds.b1_conjecture(n, gamma_t, count).ok:
        failed.append("b1")
    if not bounds.b2_thm(n, gamma_t, count).ok:
        failed.append("b2")
    if not bounds.b3_thm(n, gamma_t, count).ok:
        failed.append("b3")
    if not bounds.b4_thm(n, count).ok:
        failed.append("b4")
    return failed


@dataclass
class _Partial:
    # (n, gamma_t) -> [max_count, witness, number of trees]
    best: dict[tuple[int, int], list] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    processed: int = 0
    spot_checks: int = 0
    spot_mismatches: list[CanonicalTree] = field(default_factory=list)

    def offer(self, n: int, gamma_t: int, count: int, tree: CanonicalTree) -> None:
        slot = self.best.get((n, gamma_t))
        if slot is None:
            self.best[(n, gamma_t)] = [count, tree, 1]
            return
        slot[2] += 1
        if count > slot[0] or (count == slot[0] and tree < slot[1]):
            slot[0], slot[1] = count, tree

    def merge(self, other: _Partial) -> _Partial:
        for key, (count, tree, trees) in other.best.items():
            slot = self.best.get(key)
            if slot is None:
                self.best[key] = [count, tree, trees]
                continue
            slot[2] += trees
            if count > slot[0] or (count == slot[0] and tree < slot[1]):
                slot[0], slot[1] = count, tree
        self.violations.extend(other.violations)
        self.processed += other.processed
        self.spot_checks += other.spot_checks
        self.spot_mismatches.extend(other.spot_mismatches)
        return self


def process_cursor(cursor: Cursor, spot_check: bool = False) -> _Partial:
    part = _Partial()
    n = cursor.n
    for index, tree in cursor.indexed():
        gamma_t, count = tree_gamma_count(tree.level_sequence)
        part.processed += 1
        part.offer(n, gamma_t, count, tree)
        for bound_id in check_tree(n, gamma_t, count):
            part.violations.append(Violation(bound_id, n, gamma_t, count, tree))
        if spot_check and index % SPOT_CHECK_EVERY == 0 and n <= ORACLE_CAP:
            part.spot_checks += 1
            brute = brute_gamma_t(tree.to_forest())
            if brute[:2] != (gamma_t, count):
                part.spot_mismatches.append(tree)
    return part


# ---- driver ----------------------------------------------------------------


def _validate_range(n_lo: int, n_hi: int) -> None:
    if not 2 <= n_lo <= n_hi:
        raise ValueError(f"need 2 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    if n_hi > max_order():
        raise CapExceeded(f"n_hi = {n_hi} exceeds the tree generation cap {max_order()}", n_hi)


def sweep(n_lo: int, n_hi: int, parallelism: int = 1, spot_check: bool = False) -> SweepReport:
    """Check every tree with order in ``n_lo..n_hi``.

    The report does not depend on ``parallelism``: partial maxima merge by
    (larger count, then smaller canonical witness).
    """
    _validate_range(n_lo, n_hi)
    if parallelism < 1:
        raise ValueError("parallelism must be at least 1")
    start = time.perf_counter()
    cursors = [c for n in range(n_lo, n_hi + 1) for c in partition_range(n, parallelism)]
    total = _Partial()
    if parallelism == 1:
        for c in cursors:
            total.merge(process_cursor(c, spot_check))
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            for part in pool.map(process_cursor, cursors, [spot_check] * len(cursors)):
                total.merge(part)
    report = _finish(n_lo, n_hi, total, time.perf_counter() - start)
    log.info("swept %d trees (n=%d..%d) in %.2fs", report.trees_processed, n_lo, n_hi, report.wall_time)
    return report


def _finish(n_lo: int, n_hi: int, total: _Partial, wall_time: float) -> SweepReport:
    records = []
    for (n, gamma_t), (count, tree, trees) in sorted(total.best.items()):
        best = best_family_count(n, gamma_t)
        best_count = best[0] if best else None
        records.append(
            SweepRecord(
                n=n,
                gamma_t=gamma_t,
                max_count=count,
                witness=tree,
                b1_bound_repr=bounds.b1_exact_repr(n, gamma_t),
                attained_by_figure_family=best_count == count,
                best_family_count=best_count,
                trees=trees,
            )
        )
    violations = sorted(
        total.violations, key=lambda v: (v.n, v.gamma_t, v.bound, v.witness.level_sequence)
    )
    return SweepReport(
        n_range=(n_lo, n_hi),
        records=tuple(records),
        violations=tuple(violations),
        trees_processed=total.processed,
        spot_checks=total.spot_checks,
        spot_mismatches=tuple(sorted(total.spot_mismatches)),
        wall_time=wall_time,
    )


@dataclass(frozen=True)
class FamilyComparison:
    gamma_t: int
    max_count: int
    best_family_count: int | None

    @property
    def attained(self) -> bool:
        return self.best_family_count == self.max_count


def compare_figure_families(n: int, report: SweepReport | None = None) -> list[FamilyComparison]:
    """True maximum against the best hub-of-units tree for every γ_t at order ``n``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if report is None or not report.n_range[0] <= n <= report.n_range[1]:
        report = sweep(n, n)
    out = []
    for r in report.records:
        if r.n == n:
            best = best_family_count(n, r.gamma_t)
            out.append(FamilyComparison(r.gamma_t, r.max_count, best[0] if best else None))
    return out


# ---- serialization ---------------------------------------------------------


def _ratio(count: int, n: int, gamma_t: int) -> str:
    b1 = bounds.b1_decimal(n, gamma_t)
    return format(Decimal(count) / b1, ".12g")


def emit_report(r: SweepReport, fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in r.records:
            writer.writerow(
                [
                    rec.n,
                    rec.gamma_t,
                    str(rec.max_count),
                    format(bounds.b1_decimal(rec.n, rec.gamma_t), ".15g"),
                    _ratio(rec.max_count, rec.n, rec.gamma_t),
                    str(rec.witness),
                    "true" if rec.attained_by_figure_family else "false",
                ]
            )
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(report_to_json(r), indent=2) + "\n"
    raise ValueError(f"unsupported report format {fmt!r}")


def _tree_json(t: CanonicalTree) -> list[int]:
    return list(t.level_sequence)


def report_to_json(r: SweepReport) -> dict:
    return {
        "n_range": list(r.n_range),
        "records": [
            {
                "n": rec.n,
                "gamma_t": rec.gamma_t,
                "max_count": str(rec.max_count),
                "witness": _tree_json(rec.witness),
                "b1_bound_repr": rec.b1_bound_repr,
                "attained_by_figure_family": rec.attained_by_figure_family,
                "best_family_count": None if rec.best_family_count is None else str(rec.best_family_count),
                "trees": rec.trees,
            }
            for rec in r.records
        ],
        "violations": [
            {
                "bound": v.bound,
                "n": v.n,
                "gamma_t": v.gamma_t,
                "count": str(v.count),
                "witness": _tree_json(v.witness),
            }
            for v in r.violations
        ],
        "totals": {
            "trees_processed": r.trees_processed,
            "spot_checks": r.spot_checks,
            "spot_mismatches": [_tree_json(t) for t in r.spot_mismatches],
        },
    }


def _tree(seq: Iterable[int]) -> CanonicalTree:
    return CanonicalTree(tuple(int(x) for x in seq))


def report_from_json(data: dict | str) -> SweepReport:
    if isinstance(data, str):
        data = json.loads(data)
    records = tuple(
        SweepRecord(
            n=rec["n"],
            gamma_t=rec["gamma_t"],
            max_count=int(rec["max_count"]),
            witness=_tree(rec["witness"]),
            b1_bound_repr=rec["b1_bound_repr"],
            attained_by_figure_family=rec["attained_by_figure_family"],
            best_family_count=None if rec["best_family_count"] is None else int(rec["best_family_count"]),
            trees=rec["trees"],
        )
        for rec in data["records"]
    )
    violations = tuple(
        Violation(v["bound"], v["n"], v["gamma_t"], int(v["count"]), _tree(v["witness"]))
        for v in data["violations"]
    )
    totals = data["totals"]
    return SweepReport(
        n_range=tuple(data["n_range"]),
        records=records,
        violations=violations,
        trees_processed=totals["trees_processed"],
        spot_checks=totals["spot_checks"],
        spot_mismatches=tuple(_tree(t) for t in totals["spot_mismatches"]),
    )
