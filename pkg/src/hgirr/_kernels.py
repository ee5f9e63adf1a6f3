"""Hot numeric kernel: adjacency application over an edge array.

The power iteration spends nearly all its time computing, for each vertex i,
the sum over incident edges of the product of the other members' vector
entries. Two interchangeable implementations are provided:

* a numba ``@njit`` loop kernel (default when numba imports), and
* a vectorized pure-numpy fallback using prefix/suffix products.

Selection is controlled by the ``HGIRR_KERNEL`` environment variable:
``numba``, ``numpy``, or ``auto`` (default; prefer numba, fall back to numpy
when it is unavailable). ``set_backend`` switches at runtime, which the
benchmark and the kernel-equivalence tests use to compare both paths.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["apply_adjacency_edges", "available_backends", "backend_name", "set_backend"]


def _apply_adjacency_numpy(edges: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Pure-numpy kernel: per-edge prefix/suffix products, scattered by bincount."""
    n = x.shape[0]
    m, r = edges.shape
    if m == 0:
        return np.zeros(n, dtype=np.float64)
    vals = x[edges]
    prefix = np.ones((m, r))
    suffix = np.ones((m, r))
    np.cumprod(vals[:, :-1], axis=1, out=prefix[:, 1:])
    suffix[:, :-1] = np.cumprod(vals[:, :0:-1], axis=1)[:, ::-1]
    contrib = prefix * suffix
    return np.bincount(edges.ravel(), weights=contrib.ravel(), minlength=n)


def _apply_adjacency_loops(edges: np.ndarray, x: np.ndarray) -> np.ndarray:
    # Same association order as the numpy kernel so the two agree closely.
    n = x.shape[0]
    m = edges.shape[0]
    r = edges.shape[1]
    y = np.zeros(n, dtype=np.float64)
    prefix = np.empty(r, dtype=np.float64)
    suffix = np.empty(r, dtype=np.float64)
    for e in range(m):
        prefix[0] = 1.0
        for k in range(1, r):
            prefix[k] = prefix[k - 1] * x[edges[e, k - 1]]
        suffix[r - 1] = 1.0
        for k in range(r - 2, -1, -1):
            suffix[k] = suffix[k + 1] * x[edges[e, k + 1]]
        for k in range(r):
            y[edges[e, k]] += prefix[k] * suffix[k]
    return y


_IMPLS: dict[str, object] = {"numpy": _apply_adjacency_numpy}

try:
    from numba import njit

    _IMPLS["numba"] = njit(cache=True)(_apply_adjacency_loops)
except ImportError:
    pass


def _initial_backend() -> str:
    requested = os.environ.get("HGIRR_KERNEL", "auto").strip().lower() or "auto"
    if requested not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"HGIRR_KERNEL must be auto, numba, or numpy; got {requested!r}"
        )
    if requested == "auto":
        return "numba" if "numba" in _IMPLS else "numpy"
    if requested == "numba" and "numba" not in _IMPLS:
        raise ImportError("HGIRR_KERNEL=numba but numba is not importable")
    return requested


_active = _initial_backend()


def backend_name() -> str:
    """Name of the kernel backend currently in use."""
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


def set_backend(name: str) -> str:
    """Switch kernel backend at runtime; returns the previous backend name."""
    global _active
    if name not in _IMPLS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    previous = _active
    _active = name
    return previous


def apply_adjacency_edges(edges: np.ndarray, x: np.ndarray) -> np.ndarray:
    """(A x)_i over a 0-based (m, r) edge array using the active backend."""
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _IMPLS[_active](edges, x)
