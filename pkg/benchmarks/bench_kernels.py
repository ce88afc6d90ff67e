#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same workload through both backends, checks that the
results agree, and prints the best-of-``repeat`` wall time.
"""

import argparse
import time

from gtlab import _pykernels
from gtlab.forest import level_parents
from gtlab.oracle import neighbor_masks
from gtlab.treegen import gen_trees

try:
    from gtlab import _ckernels
except ImportError:
    _ckernels = None


def dp_workload(n):
    trees = [t.level_sequence for t in gen_trees(n)]
    jobs = [(level_parents(s), list(range(len(s) - 1, -1, -1))) for s in trees]

    def run(k):
        return [k.dp_count(p, o) for p, o in jobs]

    return f"dp_count, all {len(trees)} trees n={n}", run


def brute_workload(n, how_many):
    masks = [neighbor_masks(t.to_forest()) for _, t in zip(range(how_many), gen_trees(n))]

    def run(k):
        return [k.min_total_dominating(m)[:2] for m in masks]

    return f"min_total_dominating, {how_many} trees n={n}", run


def packing_workload(n, how_many):
    masks = [neighbor_masks(t.to_forest()) for _, t in zip(range(how_many), gen_trees(n))]

    def run(k):
        return [k.max_packing(m)[0] for m in masks]

    return f"max_packing, {how_many} trees n={n}", run


def prufer_workload(n):
    return f"prufer_codes n={n} (all {n ** (n - 2)} sequences)", lambda k: k.prufer_codes(n)


def best_time(fn, arg, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")

    workloads = [
        dp_workload(14),
        brute_workload(16, 20),
        packing_workload(14, 20),
        prufer_workload(7),
    ]
    print(f"{'workload':<48} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in workloads:
        t_py, r_py = best_time(fn, _pykernels, args.repeat)
        t_c, r_c = best_time(fn, _ckernels, args.repeat)
        if r_py != r_c:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<48} {t_py:>9.3f}s {t_c:>9.4f}s {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
