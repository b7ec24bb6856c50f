#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same deterministic workloads through degstab._fastcore and
degstab._purecore, asserts the outputs are identical, and prints a timing
table. Usage:

    python bench/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from degstab import _purecore

try:
    from degstab import _fastcore
except ImportError:
    _fastcore = None


def random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def cycle_adj(n: int) -> list[int]:
    adj = [0] * n
    for v in range(n):
        u = (v + 1) % n
        adj[v] |= 1 << u
        adj[u] |= 1 << v
    return adj


def workload_hom_search():
    rng = random.Random(11)
    cases = []
    c5 = cycle_adj(5)
    c7 = cycle_adj(7)
    for _ in range(150):
        cases.append((random_adj(rng, 9, 0.35), c5))
        cases.append((random_adj(rng, 9, 0.35), c7))

    def run(mod):
        return [mod.hom_search(p, t) for p, t in cases]

    return "hom_search (300 searches, 9-vertex patterns)", run


def workload_brute_hom():
    rng = random.Random(12)
    cases = [(random_adj(rng, 6, 0.5), random_adj(rng, 5, 0.5)) for _ in range(400)]

    def run(mod):
        return [mod.brute_hom(p, t) for p, t in cases]

    return "brute_hom (400 pairs, 5^6 maps each)", run


def workload_color():
    rng = random.Random(13)
    cases = [(random_adj(rng, 14, 0.5), k) for _ in range(120) for k in (3, 4)]

    def run(mod):
        return [mod.color_search(adj, k) for adj, k in cases]

    return "color_search (240 instances, 14 vertices)", run


def workload_edits():
    rng = random.Random(14)
    cases = [(random_adj(rng, 13, 0.5), k) for _ in range(30) for k in (2, 3)]

    def run(mod):
        return [mod.min_edits(adj, k) for adj, k in cases]

    return "min_edits (60 instances, 13 vertices)", run


def workload_odd_girth():
    rng = random.Random(15)
    cases = [random_adj(rng, 16, 0.25) for _ in range(3000)]

    def run(mod):
        return [mod.odd_girth(adj) for adj in cases]

    return "odd_girth (3000 graphs, 16 vertices)", run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats, best taken")
    args = parser.parse_args()

    workloads = [
        workload_hom_search(),
        workload_brute_hom(),
        workload_color(),
        workload_edits(),
        workload_odd_girth(),
    ]

    if _fastcore is None:
        print("compiled backend not available; timing pure kernels only")

    print(f"{'workload':<44} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, run in workloads:
        pure_best = min(
            _timed(run, _purecore) for _ in range(args.repeat)
        )
        line = f"{name:<44} {pure_best:>9.3f}s"
        if _fastcore is not None:
            expected = run(_purecore)
            got = run(_fastcore)
            if expected != got:
                raise AssertionError(f"backend outputs differ on workload {name!r}")
            fast_best = min(_timed(run, _fastcore) for _ in range(args.repeat))
            line += f" {fast_best:>9.3f}s {pure_best / fast_best:>7.1f}x"
        print(line)
    return 0


def _timed(run, mod) -> float:
    start = time.perf_counter()
    run(mod)
    return time.perf_counter() - start


if __name__ == "__main__":
    raise SystemExit(main())
