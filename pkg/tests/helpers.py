"""Shared test utilities.

``dense_rho`` is an independent oracle: it materializes the full order-r
adjacency tensor as a numpy array and runs a shifted power iteration using
plain tensor contractions, touching none of the package's kernels. Only
usable for tiny connected instances.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np


def coupled_tol(*results, base: float = 1e-9) -> float:
    """Check tolerance widened by the certified error of the solves involved."""
    return 10.0 * (sum(r.certified_error for r in results) + base)


def dense_adjacency(H) -> np.ndarray:
    A = np.zeros((H.n,) * H.r)
    weight = 1.0 / math.factorial(H.r - 1)
    for edge in H.edges:
        for perm in itertools.permutations(v - 1 for v in edge):
            A[perm] = weight
    return A


def dense_rho(H, iters: int = 20000) -> float:
    """Power iteration over the materialized tensor (connected H only)."""
    if H.m == 0:
        return 0.0
    n, r = H.n, H.r
    A = dense_adjacency(H)
    counts = Counter(v for edge in H.edges for v in edge)
    sigma = float(max(counts.values()))
    x = np.full(n, n ** (-1.0 / r))
    lo = hi = 0.0
    for _ in range(iters):
        y = A
        for _ in range(r - 1):
            y = y @ x
        y = y + sigma * x ** (r - 1)
        ratios = y / x ** (r - 1)
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= 1e-12 * max(1.0, hi):
            break
        x = y ** (1.0 / (r - 1))
        x /= float(np.sum(x**r)) ** (1.0 / r)
    return 0.5 * (lo + hi) - sigma
