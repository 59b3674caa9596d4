"""Weighted sparse actuator schedules built on dual-set sparsification.

All four schedulers share the same skeleton: orthonormalize the columns of
the controllability matrix against the Gramian, run the dual-set sparsifier
with a problem-specific second decomposition, and map the surviving column
weights back onto the (input, time) grid.  They differ in the guarantee the
second decomposition buys:

* two_sided      -- sandwich (1-eps) W <= W_s <= (1+eps) W
* max_ratio      -- every squared scaling bounded by (1 + sqrt(m/d))^2
* per_input      -- each input's total squared scaling bounded
* per_time       -- each step's total squared scaling bounded

and every variant keeps rho(W_s) within (1 - sqrt(n/dt))^-2 of rho(W) for
all systemic metrics.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor, sqrt

import numpy as np

from .dualset import dual_set
from .errors import InvalidBudget, SingularGramian
from .system import LtiSystem, Schedule, controllability_matrix, validate_horizon

_SV_TOL = 1e-8  # rank cutoff on singular values of the controllability matrix


@dataclass(frozen=True)
class WeightedScheduleResult:
    schedule: Schedule
    budget_kind: str
    epsilon: float | None = None      # two-sided factor, when applicable
    rho_bound_factor: float | None = None  # (1 - sqrt(n/dt))^-2 one-sided factor
    gamma: float | None = None        # energy-budget bound, when applicable


def epsilon_from_ratio(dt_over_n: float) -> float:
    """Two-sided approximation factor as a function of dt/n alone."""
    if dt_over_n <= 1.0:
        raise InvalidBudget(f"need d*t > n, got d*t/n = {dt_over_n}")
    x = sqrt(dt_over_n)
    return 2.0 / (x + 1.0 / x)


def epsilon_bound(n: int, t: int, d: float) -> float:
    """Guaranteed two-sided factor 2 / (sqrt(dt/n) + sqrt(n/dt)); always <= 1."""
    return epsilon_from_ratio(d * t / n)


def one_sided_factor(n: int, t: int, d: float) -> float:
    return (1.0 - sqrt(n / (d * t))) ** -2


def orthonormal_columns(sys: LtiSystem, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (C, V) where V = W^(-1/2) C has exactly orthonormal rows.

    Computed from the SVD of C rather than an explicit Gramian inverse square
    root, which keeps V V^T = I to machine precision even for badly
    conditioned Gramians.  Raises SingularGramian when C is row-rank
    deficient, i.e. the system is uncontrollable at horizon t.
    """
    C = controllability_matrix(sys, t)
    Uc, sv, Vt = np.linalg.svd(C, full_matrices=False)
    if sv[-1] <= _SV_TOL * sv[0]:
        raise SingularGramian(
            f"system is uncontrollable at horizon {t} "
            f"(sigma_min/sigma_max = {sv[-1] / sv[0]:.3e})"
        )
    return C, Uc @ Vt


def resolve_budget(sys: LtiSystem, t: int, d: float) -> int:
    """kappa = floor(d*t), validated against n < kappa <= m*t."""
    t = validate_horizon(t)
    if t < sys.n:
        raise InvalidBudget(f"horizon t={t} must be at least n={sys.n}")
    if d <= 1.0:
        raise InvalidBudget(f"average budget d must exceed 1, got {d}")
    kappa = floor(d * t)
    if not sys.n < kappa <= sys.m * t:
        raise InvalidBudget(
            f"need n < floor(d*t) <= m*t, got floor(d*t)={kappa} "
            f"with n={sys.n}, m*t={sys.m * t}"
        )
    return kappa


def schedule_two_sided(sys: LtiSystem, t: int, d: float) -> WeightedScheduleResult:
    """Schedule whose Gramian satisfies the (eps, d) sandwich of the full one."""
    kappa = resolve_budget(sys, t, d)
    _, V = orthonormal_columns(sys, t)
    c = dual_set(V, V, kappa)
    scale = 1.0 / (1.0 + sys.n / (d * t))
    sched = Schedule.from_column_weights(c * scale, sys.m, t)
    return WeightedScheduleResult(
        schedule=sched,
        budget_kind="two_sided_approx",
        epsilon=epsilon_bound(sys.n, t, d),
        rho_bound_factor=one_sided_factor(sys.n, t, d),
    )


def schedule_max_ratio(sys: LtiSystem, t: int, d: float) -> WeightedScheduleResult:
    """Schedule with every squared scaling bounded by (1 + sqrt(m/d))^2."""
    kappa = resolve_budget(sys, t, d)
    _, V = orthonormal_columns(sys, t)
    c = dual_set(V, None, kappa)
    sched = Schedule.from_column_weights(c, sys.m, t)
    return WeightedScheduleResult(
        schedule=sched,
        budget_kind="max_ratio",
        rho_bound_factor=one_sided_factor(sys.n, t, d),
        gamma=(1.0 + sqrt(sys.m / d)) ** 2,
    )


def schedule_per_input(sys: LtiSystem, t: int, d: float) -> WeightedScheduleResult:
    """Schedule where each input's total squared scaling is bounded."""
    kappa = resolve_budget(sys, t, d)
    m = sys.m
    _, V = orthonormal_columns(sys, t)
    U = np.tile(np.eye(m), t) / sqrt(t)  # l = m, U U^T = I_m exactly
    c = dual_set(V, U, kappa)
    sched = Schedule.from_column_weights(c, m, t)
    return WeightedScheduleResult(
        schedule=sched,
        budget_kind="per_input_energy",
        rho_bound_factor=one_sided_factor(sys.n, t, d),
        gamma=t * (1.0 + sqrt(m / (d * t))) ** 2,
    )


def schedule_per_time(sys: LtiSystem, t: int, d: float) -> WeightedScheduleResult:
    """Schedule where each step's total squared scaling is bounded."""
    kappa = resolve_budget(sys, t, d)
    m = sys.m
    _, V = orthonormal_columns(sys, t)
    U = np.repeat(np.eye(t), m, axis=1) / sqrt(m)  # l = t, U U^T = I_t exactly
    c = dual_set(V, U, kappa)
    sched = Schedule.from_column_weights(c, m, t)
    return WeightedScheduleResult(
        schedule=sched,
        budget_kind="per_time_energy",
        rho_bound_factor=one_sided_factor(sys.n, t, d),
        gamma=m * (1.0 + sqrt(1.0 / d)) ** 2,
    )
