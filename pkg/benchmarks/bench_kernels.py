#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Runs the hot workloads through both backends directly (independently of
the import-time selection) and prints a comparison table.

Usage:  python benchmarks/bench_kernels.py [--order N] [--pairs COUNT]
"""

import argparse
import random
import time
from itertools import permutations

from cyclat import _pykernels

try:
    from cyclat import _ckernels
except ImportError:
    _ckernels = None


def bfs_diagram(kernel, n):
    """Full breadth-first expansion of the cover graph."""
    bottom = tuple(range(1, n + 1))
    seen = {bottom}
    frontier = [bottom]
    edges = 0
    while frontier:
        nxt = set()
        for word in frontier:
            for _, _, upper in kernel.word_covers_up(word):
                edges += 1
                if upper not in seen:
                    seen.add(upper)
                    nxt.add(upper)
        frontier = sorted(nxt)
    return len(seen), edges


def rank_scan(kernel, n):
    """Rank and descent count of every cycle."""
    total = 0
    for rest in permutations(range(2, n + 1)):
        word = (1,) + rest
        total += kernel.word_rank(word) + kernel.descent_count(word)
    return total


def lattice_ops(kernel, n, pairs, vecs):
    """join/meet/leq over sampled vector pairs."""
    acc = 0
    for u, v in pairs:
        j = kernel.join_flat(n, vecs[u], vecs[v])
        m = kernel.meet_flat(n, vecs[u], vecs[v])
        acc += kernel.leq_flat(m, j)
    return acc


def sd_tables(n):
    """Join/meet index tables over all elements of the order."""
    words = sorted({_pykernels.canonical_rotation((1,) + rest)
                    for rest in permutations(range(2, n + 1))})
    vecs = [_pykernels.word_vector(w) for w in words]
    rev = {v: t for t, v in enumerate(vecs)}
    joins = tuple(tuple(rev[_pykernels.join_flat(n, u, v)] for v in vecs)
                  for u in vecs)
    meets = tuple(tuple(rev[_pykernels.meet_flat(n, u, v)] for v in vecs)
                  for u in vecs)
    return joins, meets


def sd_scan(kernel, joins, meets):
    """Full semidistributivity triple scan."""
    return kernel.sd_scan(joins, meets)


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=8,
                        help="cycle order for the workloads (default 8)")
    parser.add_argument("--pairs", type=int, default=20000,
                        help="sampled vector pairs for join/meet (default 20000)")
    args = parser.parse_args()
    n = args.order

    rng = random.Random(1)
    vecs = []
    for _ in range(500):
        rest = list(range(2, n + 1))
        rng.shuffle(rest)
        vecs.append(_pykernels.word_vector((1, *rest)))
    pairs = [(rng.randrange(500), rng.randrange(500))
             for _ in range(args.pairs)]

    sd_n = min(n - 2, 6)
    joins, meets = sd_tables(sd_n)
    workloads = [
        (f"diagram build n={n}", bfs_diagram, (n,)),
        (f"rank+descent scan n={n}", rank_scan, (n,)),
        (f"join/meet/leq x{args.pairs} n={n}", lattice_ops, (n, pairs, vecs)),
        (f"semidistributivity scan n={sd_n}", sd_scan, (joins, meets)),
    ]

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("note: compiled extension not available; timing pure backend only")

    width = max(len(name) for name, _, _ in workloads)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, fn, extra in workloads:
        times = []
        results = []
        for _, kernel in backends:
            result, elapsed = timed(fn, kernel, *extra)
            results.append(result)
            times.append(elapsed)
        assert len(set(map(str, results))) == 1, f"backends disagree on {name}"
        row = f"{name:<{width}}  " + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
