"""Systemic controllability metrics.

All six criteria map a positive-definite Gramian to a scalar and share three
structural properties: homogeneity of degree -1, monotone decrease in the
Loewner order, and convexity.  The V and G criteria additionally score the
Gramian against a fixed design pool of candidate columns.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import MissingDesignPool, SingularGramian
from .system import symmetrize

# Metrics only need a numerically invertible Gramian, so the cutoff here is
# machine epsilon rather than the stricter controllability rank tolerance.
_PD_TOL = float(np.finfo(float).eps)


class MetricKind(str, Enum):
    A_OPTIMALITY = "a"   # trace of the inverse Gramian (average control energy)
    D_OPTIMALITY = "d"   # det(W)^(-1/n)
    T_OPTIMALITY = "t"   # 1 / trace
    E_OPTIMALITY = "e"   # 1 / lambda_min
    V_OPTIMALITY = "v"   # trace(C^T W^-1 C) over the design pool C
    G_OPTIMALITY = "g"   # max diagonal entry of C^T W^-1 C

    @classmethod
    def parse(cls, text: str) -> "MetricKind":
        key = text.strip().lower()
        for suffix in ("-optimality", "_optimality"):
            if key.endswith(suffix):
                key = key[: -len(suffix)]
        return cls(key)


ALL_METRICS = tuple(MetricKind)

_NEEDS_POOL = {MetricKind.V_OPTIMALITY, MetricKind.G_OPTIMALITY}


def _pd_eigh(W: np.ndarray):
    W = symmetrize(np.asarray(W, dtype=float))
    eig, Q = np.linalg.eigh(W)
    if eig[0] <= _PD_TOL * max(eig[-1], 0.0):
        raise SingularGramian(
            f"metric requires a positive-definite Gramian "
            f"(lambda_min={eig[0]:.3e}, lambda_max={eig[-1]:.3e})"
        )
    return eig, Q


def evaluate(metric: MetricKind, W: np.ndarray,
             pool: np.ndarray | None = None) -> float:
    """Evaluate one of the six criteria on Gramian W.

    ``pool`` is the design-pool matrix, required for V- and G-optimality and
    ignored otherwise.
    """
    metric = MetricKind(metric)
    if metric in _NEEDS_POOL and pool is None:
        raise MissingDesignPool(f"{metric.name} requires a design pool")

    if metric is MetricKind.T_OPTIMALITY:
        tr = float(np.trace(np.asarray(W, dtype=float)))
        if tr <= 0:
            raise SingularGramian("trace must be positive for T-optimality")
        return 1.0 / tr

    eig, Q = _pd_eigh(W)
    if metric is MetricKind.A_OPTIMALITY:
        return float(np.sum(1.0 / eig))
    if metric is MetricKind.D_OPTIMALITY:
        # log-domain determinant to stay finite for large n
        return float(np.exp(-np.sum(np.log(eig)) / eig.size))
    if metric is MetricKind.E_OPTIMALITY:
        return float(1.0 / eig[0])

    pool = np.asarray(pool, dtype=float)
    # diagonal of pool^T W^-1 pool, one entry per pool column
    X = Q.T @ pool
    diag = np.einsum("ij,ij->j", X, X / eig[:, None])
    if metric is MetricKind.V_OPTIMALITY:
        return float(np.sum(diag))
    return float(np.max(diag))


def evaluate_clamped(metric: MetricKind, W: np.ndarray,
                     pool: np.ndarray | None, floor: float) -> float:
    """Metric value with eigenvalues clamped from below to ``floor``.

    Selection loops (greedy scans, exhaustive oracles) need a finite,
    consistently ordered value even for singular candidate Gramians; raising
    every eigenvalue to at least ``floor`` penalizes each missing direction
    by 1/floor while leaving well-conditioned candidates untouched.
    """
    metric = MetricKind(metric)
    if metric in _NEEDS_POOL and pool is None:
        raise MissingDesignPool(f"{metric.name} requires a design pool")
    if floor <= 0:
        raise ValueError("floor must be positive")
    eig, Q = np.linalg.eigh(symmetrize(np.asarray(W, dtype=float)))
    eig = np.maximum(eig, floor)
    if metric is MetricKind.T_OPTIMALITY:
        return float(1.0 / np.sum(eig))
    if metric is MetricKind.A_OPTIMALITY:
        return float(np.sum(1.0 / eig))
    if metric is MetricKind.D_OPTIMALITY:
        return float(np.exp(-np.sum(np.log(eig)) / eig.size))
    if metric is MetricKind.E_OPTIMALITY:
        return float(1.0 / eig[0])
    pool = np.asarray(pool, dtype=float)
    X = Q.T @ pool
    diag = np.einsum("ij,ij->j", X, X / eig[:, None])
    if metric is MetricKind.V_OPTIMALITY:
        return float(np.sum(diag))
    return float(np.max(diag))


def evaluate_pinv(metric: MetricKind, W: np.ndarray,
                  pool: np.ndarray | None, cutoff: float) -> float:
    """Metric value on the range of W: eigenvalues <= cutoff are dropped.

    This is the metric a selection heuristic sees while its running Gramian
    is still singular; unreachable directions simply do not contribute, so
    nothing pushes the selection toward completing the rank.  Returns inf
    when no eigenvalue clears the cutoff.
    """
    metric = MetricKind(metric)
    if metric in _NEEDS_POOL and pool is None:
        raise MissingDesignPool(f"{metric.name} requires a design pool")
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    W = symmetrize(np.asarray(W, dtype=float))
    if metric is MetricKind.T_OPTIMALITY:
        return 1.0 / max(float(np.trace(W)), cutoff)
    if metric in _NEEDS_POOL:
        eig, Q = np.linalg.eigh(W)
    else:
        eig, Q = np.linalg.eigvalsh(W), None
    keep = eig > cutoff
    if not np.any(keep):
        return float("inf")
    kept = eig[keep]
    if metric is MetricKind.A_OPTIMALITY:
        return float(np.sum(1.0 / kept))
    if metric is MetricKind.D_OPTIMALITY:
        return float(np.exp(-np.sum(np.log(kept)) / kept.size))
    if metric is MetricKind.E_OPTIMALITY:
        return float(1.0 / kept[0])
    pool = np.asarray(pool, dtype=float)
    X = Q[:, keep].T @ pool
    diag = np.einsum("ij,ij->j", X, X / kept[:, None])
    if metric is MetricKind.V_OPTIMALITY:
        return float(np.sum(diag))
    return float(np.max(diag))


def check_homogeneity(metric: MetricKind, W: np.ndarray,
                      pool: np.ndarray | None, kappa: float) -> float:
    """Relative defect of rho(kappa W) = rho(W) / kappa; zero in exact arithmetic."""
    if kappa <= 1:
        raise ValueError("kappa must exceed 1")
    base = evaluate(metric, W, pool)
    scaled = evaluate(metric, kappa * np.asarray(W, dtype=float), pool)
    return abs(scaled * kappa - base) / abs(base)


def check_monotonicity(metric: MetricKind, W1: np.ndarray, W2: np.ndarray,
                       pool: np.ndarray | None = None,
                       rel_tol: float = 1e-9) -> bool:
    """True iff rho(W2) <= rho(W1) given W1 <= W2 in the Loewner order."""
    v1 = evaluate(metric, W1, pool)
    v2 = evaluate(metric, W2, pool)
    return bool(v2 <= v1 + rel_tol * abs(v1))
