"""Deterministic dual-set spectral sparsification.

Given two equal-cardinality decompositions of identity V (n x t) and
U (l x t), ``dual_set`` selects at most kappa weighted columns so that the
weighted sum of v v^T keeps its least eigenvalue above (1 - sqrt(n/kappa))^2
while the weighted sum of u u^T keeps its largest eigenvalue below
(1 + sqrt(l/kappa))^2.  Selection is greedy against two moving spectral
barriers; the index chosen each round maximizes the lower-barrier gain minus
the upper-barrier gain, ties going to the lowest column index so runs are
bit-reproducible.

``upper_basis=None`` activates the fast path where U is the standard basis
of R^t: the upper barrier matrix is then diagonal and each round costs O(t)
on the upper side instead of an l x l eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import (
    BarrierViolation,
    DegenerateDenominator,
    InvalidBudget,
    NoFeasibleIndex,
)

DENOM_TOL = 1e-14
ORTHONORMALITY_TOL = 1e-8


@dataclass(frozen=True)
class DecompositionPair:
    """Two identity decompositions sharing a column count.

    V has orthonormal rows spanning R^n, U has orthonormal rows spanning
    R^l; ``upper`` may be None to denote the standard basis of R^t.
    """

    lower: np.ndarray
    upper: np.ndarray | None

    def __post_init__(self):
        V = np.asarray(self.lower, dtype=float)
        object.__setattr__(self, "lower", V)
        n, t = V.shape
        if n >= t:
            raise ValueError(f"need n < t, got n={n}, t={t}")
        if np.linalg.norm(V @ V.T - np.eye(n)) > ORTHONORMALITY_TOL:
            raise ValueError("V V^T deviates from the identity")
        if self.upper is not None:
            U = np.asarray(self.upper, dtype=float)
            object.__setattr__(self, "upper", U)
            ell, tu = U.shape
            if tu != t:
                raise ValueError(f"column counts differ: {t} vs {tu}")
            if ell > t:
                raise ValueError(f"need l <= t, got l={ell}")
            if np.linalg.norm(U @ U.T - np.eye(ell)) > ORTHONORMALITY_TOL:
                raise ValueError("U U^T deviates from the identity")

    @property
    def n(self) -> int:
        return self.lower.shape[0]

    @property
    def t(self) -> int:
        return self.lower.shape[1]

    @property
    def ell(self) -> int:
        return self.t if self.upper is None else self.upper.shape[0]


def lower_barrier_phi(mu: float, M: np.ndarray) -> float:
    """Soft potential of the lower barrier: sum of 1/(lambda_i - mu)."""
    eig = np.linalg.eigvalsh(np.asarray(M, dtype=float))
    if mu >= eig[0]:
        raise BarrierViolation(f"mu={mu} is not below lambda_min={eig[0]}")
    return float(np.sum(1.0 / (eig - mu)))


def upper_barrier_phi(mu: float, M: np.ndarray) -> float:
    """Soft potential of the upper barrier: sum of 1/(mu - lambda_i)."""
    eig = np.linalg.eigvalsh(np.asarray(M, dtype=float))
    if mu <= eig[-1]:
        raise BarrierViolation(f"mu={mu} is not above lambda_max={eig[-1]}")
    return float(np.sum(1.0 / (mu - eig)))


def _lower_gains(V: np.ndarray, eig: np.ndarray, Q: np.ndarray,
                 mu: float, delta: float) -> np.ndarray:
    """Lower-barrier gain of every column of V against the shifted barrier."""
    shift = mu + delta
    denom = np.sum(1.0 / (eig - shift)) - np.sum(1.0 / (eig - mu))
    if abs(denom) < DENOM_TOL:
        raise DegenerateDenominator(f"barrier potential difference {denom:.3e}")
    X2 = (Q.T @ V) ** 2
    inv1 = 1.0 / (eig - shift)
    return (inv1 ** 2) @ X2 / denom - inv1 @ X2


def lower_gain(v: np.ndarray, M: np.ndarray, mu: float, delta: float) -> float:
    """Gain of adding vector v against the lower barrier at mu with step delta."""
    eig, Q = np.linalg.eigh(np.asarray(M, dtype=float))
    return float(_lower_gains(np.asarray(v, dtype=float).reshape(-1, 1),
                              eig, Q, mu, delta)[0])


def _upper_gains_dense(U: np.ndarray, eig: np.ndarray, P: np.ndarray,
                       mu: float, delta: float) -> np.ndarray:
    shift = mu + delta
    if shift <= eig[-1]:
        raise BarrierViolation(f"shifted barrier {shift} not above lambda_max={eig[-1]}")
    denom = np.sum(1.0 / (mu - eig)) - np.sum(1.0 / (shift - eig))
    if abs(denom) < DENOM_TOL:
        raise DegenerateDenominator(f"barrier potential difference {denom:.3e}")
    Y2 = (P.T @ U) ** 2
    inv1 = 1.0 / (shift - eig)
    return (inv1 ** 2) @ Y2 / denom + inv1 @ Y2


def _upper_gains_diag(diag: np.ndarray, mu: float, delta: float) -> np.ndarray:
    """Upper gains when U is the standard basis: the barrier matrix is diagonal."""
    shift = mu + delta
    top = diag.max(initial=0.0)
    if shift <= top:
        raise BarrierViolation(f"shifted barrier {shift} not above lambda_max={top}")
    denom = np.sum(1.0 / (mu - diag)) - np.sum(1.0 / (shift - diag))
    if abs(denom) < DENOM_TOL:
        raise DegenerateDenominator(f"barrier potential difference {denom:.3e}")
    inv1 = 1.0 / (shift - diag)
    return inv1 ** 2 / denom + inv1


def upper_gain(u: np.ndarray, M: np.ndarray, mu: float, delta: float) -> float:
    """Gain of adding vector u against the upper barrier at mu with step delta."""
    eig, P = np.linalg.eigh(np.asarray(M, dtype=float))
    return float(_upper_gains_dense(np.asarray(u, dtype=float).reshape(-1, 1),
                                    eig, P, mu, delta)[0])


def dual_set(V: np.ndarray, U: np.ndarray | None, kappa: int,
             feasibility_tol: float = 1e-9) -> np.ndarray:
    """Compute nonnegative column weights c with at most kappa nonzeros.

    Returns c of length t such that
      lambda_min(sum c_i v_i v_i^T) >= (1 - sqrt(n/kappa))^2 and
      lambda_max(sum c_i u_i u_i^T) <= (1 + sqrt(l/kappa))^2.

    ``U=None`` means the standard basis of R^t.  Deterministic: identical
    inputs give bit-identical outputs.
    """
    pair = DecompositionPair(lower=V, upper=U)
    n, t, ell = pair.n, pair.t, pair.ell
    kappa = int(kappa)
    if not n < kappa <= t:
        raise InvalidBudget(f"need n < kappa <= t, got n={n}, kappa={kappa}, t={t}")

    V = pair.lower
    delta_lo = 1.0
    delta_up = (1.0 + sqrt(ell / kappa)) / (1.0 - sqrt(n / kappa))

    c = np.zeros(t)
    lower_mat = np.zeros((n, n))
    diag_up = np.zeros(t) if pair.upper is None else None
    upper_mat = None if pair.upper is None else np.zeros((ell, ell))

    for tau in range(kappa):
        mu_lo = tau - sqrt(kappa * n)
        mu_up = delta_up * (tau + sqrt(kappa * ell))

        eig_lo, Q = np.linalg.eigh(lower_mat)
        gains_lo = _lower_gains(V, eig_lo, Q, mu_lo, delta_lo)

        if pair.upper is None:
            gains_up = _upper_gains_diag(diag_up, mu_up, delta_up)
        else:
            eig_up, P = np.linalg.eigh(upper_mat)
            gains_up = _upper_gains_dense(pair.upper, eig_up, P, mu_up, delta_up)

        gap = gains_lo - gains_up
        j = int(np.argmax(gap))
        if gap[j] < -feasibility_tol:
            raise NoFeasibleIndex(
                f"no column with upper gain <= lower gain at round {tau} "
                f"(best gap {gap[j]:.3e})"
            )

        step = 2.0 / (gains_up[j] + gains_lo[j])
        c[j] += step
        vj = V[:, j]
        lower_mat += step * np.outer(vj, vj)
        if pair.upper is None:
            diag_up[j] += step
        else:
            uj = pair.upper[:, j]
            upper_mat += step * np.outer(uj, uj)

    return c * (1.0 - sqrt(n / kappa)) / kappa
