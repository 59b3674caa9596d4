"""Greedy baselines: static input selection and time-varying column selection.

Both pick one candidate per round to maximize the metric decrease, where the
metric of a still-singular running Gramian is evaluated on its range (small
eigenvalues below a spectral cutoff are dropped).  Reported final values use
the plain metric whenever the selected Gramian is nonsingular so they are
comparable across methods.  Ties in the argmax go to the lowest candidate
index.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from .errors import InvalidBudget
from .metrics import MetricKind, evaluate, evaluate_pinv
from .system import (
    RANK_TOL,
    LtiSystem,
    Schedule,
    controllability_matrix,
    gramian,
    is_controllable,
    symmetrize,
)

# The candidate-scan spectral cutoff tracks the controllability rank
# tolerance: it must dominate the eigenvalue noise floor of a singular
# Gramian while staying far below the smallest real eigenvalue of a
# controllable one.
CUTOFF_SCALE = 10.0 * RANK_TOL


@dataclass(frozen=True)
class GreedyResult:
    schedule: Schedule
    value: float | None          # un-ridged metric value; None when singular
    status: str                  # "ok" or "uncontrollable"
    selected_inputs: tuple[int, ...] | None = None  # static variant only


def _default_cutoff(W_full: np.ndarray) -> float:
    return CUTOFF_SCALE * float(np.linalg.eigvalsh(W_full)[-1])


def _scan_value(metric: MetricKind, W: np.ndarray, pool, cutoff: float) -> float:
    """Candidate-scan metric value: the metric on the range of W.

    While the running Gramian is singular the scan sees only the reachable
    subspace; unreachable directions contribute nothing, so the selection
    follows the metric alone with no pressure toward completing the rank.
    This reproduces the known failure mode of static greedy input selection
    on adversarial systems.  Reported final values always go through
    ``evaluate``.
    """
    return evaluate_pinv(metric, W, pool, cutoff)


def _final_value(metric, W, pool):
    if is_controllable(W):
        return evaluate(metric, W, pool), "ok"
    return None, "uncontrollable"


def greedy_static(sys: LtiSystem, t: int, d: int, metric: MetricKind,
                  pool: np.ndarray | None = None,
                  alpha: float | None = None) -> GreedyResult:
    """Pick d inputs, active at every step, one at a time.

    ``alpha`` is the spectral cutoff below which candidate eigenvalues are
    treated as zero during the scan; it defaults to a small multiple of the
    full Gramian's largest eigenvalue.
    """
    m, n = sys.m, sys.n
    d = int(d)
    if not 1 <= d <= m:
        raise InvalidBudget(f"need 1 <= d <= m, got d={d}, m={m}")
    W_full = gramian(sys, t)
    if alpha is None:
        alpha = _default_cutoff(W_full)
    if alpha <= 0:
        raise ValueError("spectral cutoff alpha must be positive")

    # per-input Gramians, so each candidate evaluation is one metric call
    C = controllability_matrix(sys, t)
    input_grams = []
    for j in range(m):
        cols = C[:, j::m]
        input_grams.append(symmetrize(cols @ cols.T))

    W_s = np.zeros((n, n))
    remaining = list(range(m))
    chosen: list[int] = []
    for _ in range(d):
        best_j = None
        best_value = None
        for j in remaining:
            value = _scan_value(metric, W_s + input_grams[j], pool, alpha)
            if best_value is None or value < best_value:
                best_value = value
                best_j = j
        chosen.append(best_j)
        remaining.remove(best_j)
        W_s = symmetrize(W_s + input_grams[best_j])

    s = np.zeros((m, t))
    s[chosen, :] = 1.0
    value, status = _final_value(metric, W_s, pool)
    return GreedyResult(schedule=Schedule(s=s), value=value, status=status,
                        selected_inputs=tuple(chosen))


def greedy_time_varying(sys: LtiSystem, t: int, d: float, metric: MetricKind,
                        pool: np.ndarray | None = None,
                        alpha: float | None = None) -> GreedyResult:
    """Pick ceil(d*t) controllability columns, one at a time.

    A chosen column is removed from the candidate pool, so every
    (input, time) pair is used at most once and scalings stay in {0, 1}.
    """
    m, n = sys.m, sys.n
    M = ceil(d * t)
    if M < 1:
        raise InvalidBudget(f"need ceil(d*t) >= 1, got {M}")
    if M > m * t:
        raise InvalidBudget(f"budget {M} exceeds the m*t = {m * t} grid")
    C = controllability_matrix(sys, t)
    W_full = symmetrize(C @ C.T)
    if alpha is None:
        alpha = _default_cutoff(W_full)
    if alpha <= 0:
        raise ValueError("spectral cutoff alpha must be positive")

    W_s = np.zeros((n, n))
    remaining = list(range(m * t))
    chosen: list[int] = []
    for _ in range(M):
        best_q = None
        best_value = None
        for q in remaining:
            col = C[:, q]
            value = _scan_value(metric, W_s + np.outer(col, col), pool, alpha)
            if best_value is None or value < best_value:
                best_value = value
                best_q = q
        chosen.append(best_q)
        remaining.remove(best_q)
        col = C[:, best_q]
        W_s = symmetrize(W_s + np.outer(col, col))

    weights = np.zeros(m * t)
    weights[chosen] = 1.0
    value, status = _final_value(metric, W_s, pool)
    return GreedyResult(schedule=Schedule.from_column_weights(weights, m, t),
                        value=value, status=status)
