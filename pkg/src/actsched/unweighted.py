"""Unweighted (0/1) actuator schedules and exhaustive reference solvers.

The scheduler rounds the max-ratio weighted schedule up to its support: the
scaling bound guarantees every weighted entry is at most 1 after division by
(1 + sqrt(m/d)), so the ceiling lands in {0, 1}.  The exhaustive solvers are
verification oracles for small instances only; the underlying selection
problems are NP-hard, so both are guarded by hard size limits.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, floor, sqrt

import numpy as np

from .errors import InvalidBudget, TooLarge
from .metrics import MetricKind, evaluate_clamped
from .system import (
    RANK_TOL,
    LtiSystem,
    Schedule,
    controllability_matrix,
    gramian,
    symmetrize,
)
from .weighted import (
    WeightedScheduleResult,
    one_sided_factor,
    schedule_max_ratio,
)

ENUM_GRID_LIMIT = 20       # brute_force_schedule: m*t cells
ENUM_SUBSET_LIMIT = 10**5  # brute_force_static: binomial(m, d) subsets
# Eigenvalue floor for ranking singular candidates, relative to the full
# Gramian's largest eigenvalue; see selection_floor.
FLOOR_SCALE = 10.0 * RANK_TOL


def selection_floor(W_full: np.ndarray) -> float:
    """Eigenvalue floor used to rank candidate Gramians in exhaustive scans.

    Sits an order of magnitude above the controllability rank tolerance, so
    each unreachable direction costs 1/floor while genuine eigenvalues pass
    through unchanged.
    """
    return FLOOR_SCALE * float(np.linalg.eigvalsh(W_full)[-1])


def schedule_unweighted(sys: LtiSystem, t: int, d: float) -> WeightedScheduleResult:
    """0/1 schedule with at most floor(d*t) activations.

    Guarantees rho(W_s) <= ((1 + sqrt(m/d)) / (1 - sqrt(n/dt)))^2 rho(W) for
    every systemic metric.
    """
    weighted = schedule_max_ratio(sys, t, d)
    gamma_root = 1.0 + sqrt(sys.m / d)
    s = np.ceil(weighted.schedule.s / gamma_root)
    sched = Schedule(s=s)
    return WeightedScheduleResult(
        schedule=sched,
        budget_kind="unweighted",
        rho_bound_factor=(gamma_root ** 2) * one_sided_factor(sys.n, t, d),
    )


def brute_force_schedule(sys: LtiSystem, t: int, d: float,
                         metric: MetricKind,
                         pool: np.ndarray | None = None) -> Schedule:
    """Exhaustive optimum over all 0/1 supports of size <= floor(d*t).

    Enumeration oracle: supports are scanned in lexicographic order and ties
    keep the first minimizer, so the result is deterministic.
    """
    m, n = sys.m, sys.n
    t = int(t)
    if m * t > ENUM_GRID_LIMIT:
        raise TooLarge(f"m*t = {m * t} exceeds the enumeration limit {ENUM_GRID_LIMIT}")
    budget = floor(d * t)
    if budget < 1:
        raise InvalidBudget(f"floor(d*t) must be >= 1, got {budget}")

    C = controllability_matrix(sys, t)
    W_full = symmetrize(C @ C.T)
    floor_value = selection_floor(W_full)

    best_value = None
    best_support: tuple[int, ...] = ()
    cells = m * t
    for size in range(min(budget, cells) + 1):
        for support in combinations(range(cells), size):
            cols = C[:, list(support)] if support else np.zeros((n, 0))
            W = symmetrize(cols @ cols.T)
            value = evaluate_clamped(metric, W, pool, floor_value)
            if best_value is None or value < best_value:
                best_value = value
                best_support = support

    s = np.zeros(cells)
    s[list(best_support)] = 1.0
    return Schedule.from_column_weights(s, m, t)


def brute_force_static(sys: LtiSystem, t: int, d: float,
                       metric: MetricKind,
                       pool: np.ndarray | None = None) -> tuple[int, ...]:
    """Exhaustive optimum over input subsets of size <= floor(d), active at all times."""
    m = sys.m
    size_cap = min(floor(d), m)
    if size_cap < 1:
        raise InvalidBudget(f"floor(d) must be >= 1, got {floor(d)}")
    if comb(m, size_cap) > ENUM_SUBSET_LIMIT:
        raise TooLarge(
            f"binomial({m}, {size_cap}) exceeds the enumeration limit {ENUM_SUBSET_LIMIT}"
        )

    W_full = gramian(sys, t)
    floor_value = selection_floor(W_full)

    best_value = None
    best_subset: tuple[int, ...] = ()
    for size in range(size_cap + 1):
        for subset in combinations(range(m), size):
            sub = LtiSystem(A=sys.A, B=sys.B[:, list(subset)]) if subset else None
            if sub is None:
                W = np.zeros((sys.n, sys.n))
            else:
                W = gramian(sub, t)
            value = evaluate_clamped(metric, W, pool, floor_value)
            if best_value is None or value < best_value:
                best_value = value
                best_subset = subset
    return best_subset
