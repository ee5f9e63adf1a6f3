"""Irregularity measures, the inequality suite, and near-regularization.

Measures, for an r-uniform hypergraph with n vertices, m edges, and degree
vector d:

* ``epsilon``: spectral radius minus the average degree r*m/n,
* ``s_measure``: total absolute deviation of degrees from r*m/n,
* ``v_measure``: (1/n) sum d_i^(r/(r-1)) - (r*m/n)^(r/(r-1)),
* ``s_r_measure``: for an r-partite instance, the deviation of each class's
  degrees from that class's average m/n_i, summed over classes.

``bound_suite`` evaluates every supported inequality against a certified
spectral radius and reports each as a named :class:`BoundCheck`. Checks whose
hypotheses fail (no partition supplied, isolated vertices, disconnected input
where connectivity is required) are reported as skipped rather than failed.

``regularize`` and ``regularize_partitewise`` rewire edges from maximum- to
minimum-degree vertices until all degrees (per class, in the partite variant)
lie within a band of width 1, recording the swaps in an
:class:`~hgirr.core.EdgeTrace`. The edit count is bounded by ``s_measure``
(respectively ``s_r_measure``) of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    Edge,
    EdgeTrace,
    HypergraphError,
    Partition,
    UniformHypergraph,
    first_partition_violation,
    is_connected,
    union_edges,
)
from .spectral import SpectralOptions, SpectralResult, spectral_radius

_EPS = float(np.finfo(np.float64).eps)

__all__ = [
    "BoundCheck",
    "IrregularityReport",
    "analyze",
    "average_degree",
    "bound_suite",
    "epsilon",
    "regularize",
    "regularize_partitewise",
    "s_measure",
    "s_r_measure",
    "v_measure",
    "weyl_check",
]


@dataclass(frozen=True)
class BoundCheck:
    """One named inequality lhs <= rhs with its evaluation.

    ``holds`` tolerates a slack down to -tolerance; the tolerance is widened
    by the certified solver error so that floating point cannot produce a
    false violation. A check whose hypotheses fail carries ``skipped_reason``
    and counts as neither passed nor failed.
    """

    name: str
    lhs: float
    rhs: float
    tolerance: float
    equality_expected: bool | None = None
    equality_reason: str | None = None
    skipped_reason: str | None = None

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    @property
    def holds(self) -> bool:
        return True if self.skipped else self.slack >= -self.tolerance


@dataclass(frozen=True)
class IrregularityReport:
    n: int
    m: int
    r: int
    avg_degree: float
    epsilon: float
    s: float
    v: float
    s_r: float | None
    rho: float
    residual: float
    converged: bool
    bound_checks: tuple[BoundCheck, ...]


def average_degree(H: UniformHypergraph) -> float:
    return (H.r * H.m) / H.n


def epsilon(H: UniformHypergraph, rho) -> float:
    """Spectral radius minus average degree; nonnegative, zero iff regular."""
    return _rho_value(rho) - average_degree(H)


def s_measure(H: UniformHypergraph) -> float:
    """Sum of |d_i - r*m/n|. Computed as an integer sum over |n*d_i - r*m|
    divided once by n, so regular inputs give exactly 0."""
    rm = H.r * H.m
    total = int(np.abs(H.n * H.degree_array - rm).sum())
    return total / H.n


def v_measure(H: UniformHypergraph) -> float:
    """(1/n) sum d_i^(r/(r-1)) minus (r*m/n)^(r/(r-1)).

    Nonnegative by the power-mean inequality; exactly 0 on regular inputs
    (both terms coincide analytically, so the subtraction is skipped).
    """
    deg = H.degree_array
    if deg.max() == deg.min():
        return 0.0
    alpha = H.r / (H.r - 1)
    davg = (H.r * H.m) / H.n
    # summing in sorted order makes the value invariant under relabeling
    powered = np.sort(deg).astype(np.float64) ** alpha
    return float(np.mean(powered) - davg**alpha)


def s_r_measure(H: UniformHypergraph, P: Partition) -> float:
    """Per-class degree deviation: sum over classes of sum_j |d_j - m/n_i|."""
    violation = first_partition_violation(H, P)
    if violation is not None:
        raise HypergraphError(
            f"invalid partition: edge {list(violation)} does not meet every class once"
        )
    deg = H.degree_array
    total = 0.0
    for members in P.classes:
        size = len(members)
        if size == 0:
            continue
        acc = sum(abs(size * int(deg[v - 1]) - H.m) for v in members)
        total += acc / size
    return total


def _rho_value(rho) -> float:
    return float(rho.rho) if isinstance(rho, SpectralResult) else float(rho)


def _certified_error(rho) -> float:
    return rho.certified_error if isinstance(rho, SpectralResult) else 0.0


def _coupled_tolerance(base: float | None, certified: float) -> float:
    derived = 10.0 * (certified + 1e-9)
    return derived if base is None else max(float(base), derived)


def _check(
    name: str,
    lhs: float,
    rhs: float,
    tol: float,
    eq: bool = False,
    reason: str | None = None,
) -> BoundCheck:
    return BoundCheck(
        name=name,
        lhs=float(lhs),
        rhs=float(rhs),
        tolerance=float(tol),
        equality_expected=True if eq else None,
        equality_reason=reason if eq else None,
    )


def _skip(name: str, reason: str) -> BoundCheck:
    return BoundCheck(name=name, lhs=0.0, rhs=0.0, tolerance=0.0, skipped_reason=reason)


def bound_suite(
    H: UniformHypergraph,
    spectral,
    partition: Partition | None = None,
    check_tolerance: float | None = 1e-8,
    opts: SpectralOptions | None = None,
) -> list[BoundCheck]:
    """Evaluate every supported inequality for H at a certified spectral radius.

    ``spectral`` is the :class:`SpectralResult` for H (a bare float is
    accepted and treated as exact). The effective tolerance of each check is
    ``max(check_tolerance, 10 * (certified error + 1e-9))``; passing
    ``check_tolerance=None`` uses the certified part alone. Partition-
    dependent checks are emitted as skipped when no partition is supplied;
    ``opts`` configures the extra solve needed by the class-regularized
    radius check.
    """
    rho = _rho_value(spectral)
    tol = _coupled_tolerance(check_tolerance, _certified_error(spectral))

    if partition is not None:
        violation = first_partition_violation(H, partition)
        if violation is not None:
            raise HypergraphError(
                f"invalid partition: edge {list(violation)} does not meet every class once"
            )

    deg = H.degree_array
    n, m, r = H.n, H.m, H.r
    davg = (r * m) / n
    regular = bool(deg.max() == deg.min())
    edge_products = [
        math.prod(int(deg[v - 1]) for v in edge) for edge in H.edges
    ]
    constant_product = m > 0 and len(set(edge_products)) == 1
    connected = is_connected(H)
    checks: list[BoundCheck] = []

    checks.append(_check("cooper_dutle", davg, rho, tol, eq=regular, reason="regular"))

    # Two-sided sandwich min d <= rho <= max d, encoded by its binding side.
    if rho - float(deg.min()) <= float(deg.max()) - rho:
        checks.append(
            _check("row_sum_sandwich", float(deg.min()), rho, tol, eq=regular, reason="regular")
        )
    else:
        checks.append(
            _check("row_sum_sandwich", rho, float(deg.max()), tol, eq=regular, reason="regular")
        )

    if partition is not None:
        complete = m >= 1 and m == math.prod(partition.class_sizes)
        checks.append(
            _check(
                "size_upper",
                rho,
                m ** ((r - 1) / r),
                tol,
                eq=complete,
                reason="complete r-partite",
            )
        )
    else:
        coef = r / math.factorial(r) ** (1.0 / r)
        checks.append(_check("size_upper", rho, coef * m ** ((r - 1) / r), tol))

    if m == 0:
        checks.append(_skip("edge_gm_upper", "no edges"))
    elif not connected:
        checks.append(_skip("edge_gm_upper", "disconnected"))
    else:
        rhs = max(p ** (1.0 / r) for p in edge_products)
        checks.append(
            _check(
                "edge_gm_upper",
                rho,
                rhs,
                tol,
                eq=constant_product,
                reason="constant edge degree product",
            )
        )

    if m == 0 or int(deg.min()) == 0:
        checks.append(_skip("gm_lower", "zero degree"))
        checks.append(_skip("hm_lower", "zero degree"))
    else:
        # These compare at the rho**r scale: the certified error must be
        # amplified by the derivative r * rho**(r-1), and the exp/log
        # evaluation of the means carries rounding error proportional to
        # the magnitude itself, so pad by a machine-epsilon term as well.
        scale = max(1.0, rho) ** r
        float_noise = 64.0 * _EPS * scale * (1.0 + math.log(scale))
        cert_powered = (
            _certified_error(spectral) * r * max(1.0, rho) ** (r - 1) + float_noise
        )
        tol_powered = _coupled_tolerance(check_tolerance, cert_powered)
        gm = math.exp(sum(math.log(p) for p in edge_products) / m)
        checks.append(
            _check(
                "gm_lower",
                gm,
                rho**r,
                tol_powered,
                eq=constant_product,
                reason="constant edge degree product",
            )
        )
        hm = m / sum(1.0 / p for p in edge_products)
        checks.append(
            _check(
                "hm_lower",
                hm,
                rho**r,
                tol_powered,
                eq=constant_product,
                reason="constant edge degree product",
            )
        )

    alpha = r / (r - 1)
    power_mean = float(np.mean(deg.astype(np.float64) ** alpha)) ** ((r - 1) / r)
    checks.append(_check("power_mean_lower", power_mean, rho, tol, eq=regular, reason="regular"))

    s = s_measure(H)
    coef_upper = r / math.factorial(r) ** (1.0 / r)
    checks.append(
        _check("theorem2_upper", rho - davg, coef_upper * (s / 2.0) ** ((r - 1) / r), tol)
    )

    if m == 0:
        checks.append(_skip("theorem2_lower", "no edges"))
    else:
        v = v_measure(H)
        coef_lower = ((r - 1) / m ** (1.0 / r)) * (
            math.factorial(r) ** (1.0 / r) / r**r
        ) ** (1.0 / (r - 1))
        checks.append(_check("theorem2_lower", coef_lower * v, rho - davg, tol))

    if partition is None:
        checks.append(_skip("theorem1", "no partition"))
        checks.append(_skip("claim1", "no partition"))
        checks.append(_skip("claim2", "no partition"))
    elif any(size == 0 for size in partition.class_sizes):
        checks.append(_skip("theorem1", "empty class"))
        checks.append(_skip("claim1", "empty class"))
        checks.append(_skip("claim2", "empty class"))
    else:
        geo = math.prod(partition.class_sizes) ** (1.0 / r)
        s_r = s_r_measure(H, partition)
        checks.append(
            _check("theorem1", rho - m / geo, (s_r / 2.0) ** ((r - 1) / r), tol)
        )
        checks.append(_check("claim1", (n / r) ** (1.0 / r), geo, tol))
        regularized, _ = regularize_partitewise(H, partition)
        hat = spectral_radius(regularized, opts)
        tol_hat = _coupled_tolerance(check_tolerance, hat.certified_error)
        rhs = m / geo + (n / r) ** (1.0 - 1.0 / r)
        checks.append(_check("claim2", hat.rho, rhs, tol_hat))

    return checks


def weyl_check(
    H1: UniformHypergraph,
    H2: UniformHypergraph,
    opts: SpectralOptions | None = None,
    check_tolerance: float | None = 1e-8,
) -> BoundCheck:
    """Subadditivity of the spectral radius over the edge-set union."""
    union = union_edges(H1, H2)
    r1 = spectral_radius(H1, opts)
    r2 = spectral_radius(H2, opts)
    ru = spectral_radius(union, opts)
    certified = r1.certified_error + r2.certified_error + ru.certified_error
    tol = _coupled_tolerance(check_tolerance, certified)
    return _check("weyl", ru.rho, r1.rho + r2.rho, tol)


def _find_swap(
    sorted_edges: list[Edge], edge_set: set[Edge], receiver: int, donor: int
) -> tuple[Edge, Edge] | None:
    """First edge in canonical order through the donor but not the receiver
    whose rewired version is not already present."""
    for edge in sorted_edges:
        if donor in edge and receiver not in edge:
            candidate = tuple(sorted([v for v in edge if v != donor] + [receiver]))
            if candidate not in edge_set:
                return edge, candidate
    return None


def regularize(H: UniformHypergraph) -> tuple[UniformHypergraph, EdgeTrace]:
    """Rewire edges until all degrees lie within a band of width 1.

    While the maximum and minimum degree differ by at least 2, an edge is
    moved from the lowest-id maximum-degree vertex to the lowest-id
    minimum-degree vertex (first admissible edge in canonical order). Such an
    edge always exists when the donor's degree exceeds the receiver's. The
    output keeps n, m, and r, and differs from H in at most s_measure(H)
    edges; swaps between vertices strictly below and strictly above the
    average-degree band each reduce s_measure by exactly 2.
    """
    deg = H.degree_array.tolist()
    edge_set = set(H.edges)
    sorted_edges = sorted(edge_set)
    swaps: list[tuple[Edge, Edge]] = []
    while True:
        dmin = min(deg)
        dmax = max(deg)
        if dmax - dmin < 2:
            break
        receiver = deg.index(dmin) + 1
        donor = deg.index(dmax) + 1
        found = _find_swap(sorted_edges, edge_set, receiver, donor)
        if found is None:
            raise RuntimeError(
                f"no swappable edge from vertex {donor} to vertex {receiver}; "
                "this indicates a bug, such an edge must exist"
            )
        removed, inserted = found
        edge_set.remove(removed)
        edge_set.add(inserted)
        sorted_edges = sorted(edge_set)
        deg[donor - 1] -= 1
        deg[receiver - 1] += 1
        swaps.append((removed, inserted))
    if not swaps:
        return H, EdgeTrace(())
    return UniformHypergraph(H.r, H.n, tuple(sorted(edge_set))), EdgeTrace(tuple(swaps))


def regularize_partitewise(
    H: UniformHypergraph, P: Partition
) -> tuple[UniformHypergraph, EdgeTrace]:
    """Class-preserving variant: within each class, degrees end up within 1.

    Swaps only ever replace a vertex by another vertex of the same class, so
    the output is r-partite with respect to P whenever the input is. The
    output differs from H in at most s_r_measure(H, P) edges.
    """
    violation = first_partition_violation(H, P)
    if violation is not None:
        raise HypergraphError(
            f"invalid partition: edge {list(violation)} does not meet every class once"
        )
    deg = H.degree_array.tolist()
    edge_set = set(H.edges)
    sorted_edges = sorted(edge_set)
    swaps: list[tuple[Edge, Edge]] = []
    for members in P.classes:
        if len(members) < 2:
            continue
        while True:
            class_degrees = [deg[v - 1] for v in members]
            dmin = min(class_degrees)
            dmax = max(class_degrees)
            if dmax - dmin < 2:
                break
            receiver = members[class_degrees.index(dmin)]
            donor = members[class_degrees.index(dmax)]
            found = _find_swap(sorted_edges, edge_set, receiver, donor)
            if found is None:
                raise RuntimeError(
                    f"no swappable edge from vertex {donor} to vertex {receiver}; "
                    "this indicates a bug, such an edge must exist"
                )
            removed, inserted = found
            edge_set.remove(removed)
            edge_set.add(inserted)
            sorted_edges = sorted(edge_set)
            deg[donor - 1] -= 1
            deg[receiver - 1] += 1
            swaps.append((removed, inserted))
    if not swaps:
        return H, EdgeTrace(())
    return UniformHypergraph(H.r, H.n, tuple(sorted(edge_set))), EdgeTrace(tuple(swaps))


def analyze(
    H: UniformHypergraph,
    partition: Partition | None = None,
    opts: SpectralOptions | None = None,
    check_tolerance: float | None = 1e-8,
) -> IrregularityReport:
    """Solve for the spectral radius and assemble the full measure/bound report."""
    result = spectral_radius(H, opts)
    checks = bound_suite(H, result, partition, check_tolerance, opts)
    s_r = s_r_measure(H, partition) if partition is not None else None
    return IrregularityReport(
        n=H.n,
        m=H.m,
        r=H.r,
        avg_degree=average_degree(H),
        epsilon=epsilon(H, result),
        s=s_measure(H),
        v=v_measure(H),
        s_r=s_r,
        rho=result.rho,
        residual=result.residual,
        converged=result.converged,
        bound_checks=tuple(checks),
    )
