"""Discrete-time LTI systems, controllability matrices and Gramians.

The column convention used throughout: the controllability matrix is
block-ordered ``[B, AB, ..., A^(t-1) B]`` and the flat column ``i + m*k``
(0-based input ``i``, 0-based power ``k``) holds ``A^k b_i``.  A scaling
applied at schedule time ``t-k-1`` multiplies that column in the scheduled
Gramian, so weighted column selections translate to schedules by reversing
the time axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SingularGramian

# Relative eigenvalue threshold below which a Gramian counts as singular.
# Forming W = C C^T squares the conditioning, so genuinely controllable but
# badly conditioned systems can push lambda_min/lambda_max near 1e-13; the
# numerical noise floor for a rank-deficient W sits around n*eps ~ 1e-15.
RANK_TOL = 3e-15


def _as_matrix(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be a 2-D matrix, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class LtiSystem:
    """The pair (A, B) of x(k+1) = A x(k) + B u(k)."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = _as_matrix(self.A, "A")
        B = _as_matrix(self.B, "B")
        if A.shape[0] != A.shape[1]:
            raise DimensionError(f"A must be square, got {A.shape}")
        if B.shape[0] != A.shape[0]:
            raise DimensionError(
                f"B must have {A.shape[0]} rows to match A, got {B.shape}"
            )
        if A.shape[0] < 1 or B.shape[1] < 1:
            raise DimensionError("state and input dimensions must be at least 1")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def m(self) -> int:
        return self.B.shape[1]


@dataclass(frozen=True)
class Schedule:
    """Nonnegative input scalings s[i, k] over an m-by-t grid.

    ``active_sets[k]`` is the set of inputs with positive scaling at time k;
    ``d_avg`` is the average number of active inputs per step.
    """

    s: np.ndarray

    def __post_init__(self):
        s = _as_matrix(self.s, "s")
        if np.any(s < 0):
            raise ValueError("schedule scalings must be nonnegative")
        object.__setattr__(self, "s", s)

    @property
    def m(self) -> int:
        return self.s.shape[0]

    @property
    def t(self) -> int:
        return self.s.shape[1]

    @property
    def active_sets(self) -> list[set[int]]:
        return [set(np.flatnonzero(self.s[:, k])) for k in range(self.t)]

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.s))

    @property
    def d_avg(self) -> float:
        return self.support_size / self.t

    def squared_column_weights(self) -> np.ndarray:
        """Flat weights w[i + m*k] = s[i, t-k-1]^2 on the controllability columns."""
        return (self.s[:, ::-1] ** 2).T.reshape(-1)

    @classmethod
    def from_column_weights(cls, c: np.ndarray, m: int, t: int) -> "Schedule":
        """Build the schedule whose squared scalings are the flat column weights c."""
        c = np.asarray(c, dtype=float)
        if c.shape != (m * t,):
            raise DimensionError(f"expected {m * t} weights, got {c.shape}")
        s = np.sqrt(c.reshape(t, m).T[:, ::-1])
        return cls(s=s)


def validate_horizon(t: int) -> int:
    t = int(t)
    if t < 1:
        raise ValueError(f"horizon must be >= 1, got {t}")
    return t


def controllability_matrix(sys: LtiSystem, t: int) -> np.ndarray:
    """Return [B, AB, ..., A^(t-1) B], shape n x (m*t)."""
    t = validate_horizon(t)
    n, m = sys.n, sys.m
    C = np.empty((n, m * t))
    block = sys.B.copy()
    for k in range(t):
        C[:, k * m:(k + 1) * m] = block
        if k + 1 < t:
            block = sys.A @ block
    return C


def gramian(sys: LtiSystem, t: int) -> np.ndarray:
    """Controllability Gramian W(t) = sum_{i<t} A^i B B^T (A^i)^T."""
    t = validate_horizon(t)
    W = np.zeros((sys.n, sys.n))
    block = sys.B.copy()
    for _ in range(t):
        W += block @ block.T
        block = sys.A @ block
    return symmetrize(W)


def scheduled_gramian(sys: LtiSystem, sched: Schedule, t: int) -> np.ndarray:
    """Gramian of the scheduled system.

    The scaling at schedule time k multiplies the rank-one term built from
    A^(t-k-1) b_j.
    """
    t = validate_horizon(t)
    if sched.m != sys.m or sched.t != t:
        raise DimensionError(
            f"schedule shape {sched.s.shape} does not match (m, t) = ({sys.m}, {t})"
        )
    C = controllability_matrix(sys, t)
    w = sched.squared_column_weights()
    return symmetrize((C * w) @ C.T)


def symmetrize(W: np.ndarray) -> np.ndarray:
    return (W + W.T) / 2.0


def is_controllable(W: np.ndarray, rank_tol: float = RANK_TOL) -> bool:
    """True iff lambda_min(W) > rank_tol * lambda_max(W)."""
    eig = np.linalg.eigvalsh(symmetrize(W))
    return bool(eig[0] > rank_tol * max(eig[-1], 0.0))


def gramian_sqrt_inv(W: np.ndarray, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Symmetric M with M W M = I, via eigendecomposition.

    Raises SingularGramian when W is not positive definite relative to
    rank_tol, which signals an uncontrollable system at this horizon.
    """
    W = symmetrize(_as_matrix(W, "W"))
    eig, Q = np.linalg.eigh(W)
    if eig[0] <= rank_tol * max(eig[-1], 0.0):
        raise SingularGramian(
            f"Gramian is singular (lambda_min={eig[0]:.3e}, lambda_max={eig[-1]:.3e})"
        )
    return symmetrize((Q / np.sqrt(eig)) @ Q.T)


def is_eps_d_approximation(W: np.ndarray, W_s: np.ndarray, eps: float,
                           slack: float = 1e-8) -> bool:
    """Check the two-sided sandwich (1-eps) W <= W_s <= (1+eps) W.

    Equivalent to all eigenvalues of W^(-1/2) W_s W^(-1/2) lying in
    [1-eps-slack, 1+eps+slack].
    """
    M = gramian_sqrt_inv(W)
    eig = np.linalg.eigvalsh(symmetrize(M @ symmetrize(W_s) @ M))
    return bool(eig[0] >= 1.0 - eps - slack and eig[-1] <= 1.0 + eps + slack)
