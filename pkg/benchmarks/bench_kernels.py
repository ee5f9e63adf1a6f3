#!/usr/bin/env python3
"""Benchmark the numba kernel against the pure-numpy fallback.

Times the raw adjacency application and a full spectral-radius solve on a
few instance shapes, once per available backend, and prints the speedup.

    python3 benchmarks/bench_kernels.py [--repeat 2000] [--solves 20]
"""

import argparse
import math
import time

import numpy as np

from hgirr import build, random_uniform, spectral_radius
from hgirr._kernels import apply_adjacency_edges, available_backends, set_backend

import itertools


def instances():
    yield "path r=3 n=5 m=2", build(3, 5, [[1, 2, 3], [1, 4, 5]])
    yield "random r=3 n=10 m=60", random_uniform(10, 60, 3, seed=1)
    yield "random r=4 n=10 m=150", random_uniform(10, 150, 4, seed=2)
    n = 12
    yield f"complete r=3 n={n} m={math.comb(n, 3)}", build(
        3, n, list(itertools.combinations(range(1, n + 1), 3))
    )


def time_apply(H, repeat):
    x = np.full(H.n, H.n ** (-1.0 / H.r))
    edges = H.edge_array
    apply_adjacency_edges(edges, x)  # warm up (jit compile on first call)
    start = time.perf_counter()
    for _ in range(repeat):
        apply_adjacency_edges(edges, x)
    return (time.perf_counter() - start) / repeat


def time_solve(H, solves):
    spectral_radius(H)  # warm up
    start = time.perf_counter()
    for _ in range(solves):
        spectral_radius(H)
    return (time.perf_counter() - start) / solves


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=2000, help="kernel calls per timing")
    parser.add_argument("--solves", type=int, default=20, help="full solves per timing")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'instance':<28} {'measure':<8}"
    for backend in backends:
        header += f" {backend + ' (us)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for label, H in instances():
        for measure, timer, count in (
            ("apply", time_apply, args.repeat),
            ("solve", time_solve, args.solves),
        ):
            row = f"{label:<28} {measure:<8}"
            times = {}
            for backend in backends:
                set_backend(backend)
                times[backend] = timer(H, count)
                row += f" {times[backend] * 1e6:>14.2f}"
            if "numba" in times and "numpy" in times:
                row += f" {times['numpy'] / times['numba']:>8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
