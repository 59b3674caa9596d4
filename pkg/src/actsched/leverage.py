"""Leverage scores of controllability columns and the randomized scheduler.

The leverage score of column A^k b_j measures its spectral importance to the
full controllability matrix; scores lie in [0, 1] and sum to the rank of
that matrix.  Sampling (input, time) pairs with probability proportional to
the scores and reweighting by the inverse probability gives an unbiased
estimator of the Gramian; with a budget of order n log n / (eps^2 t) per
step the schedule lands inside the two-sided eps-sandwich with probability
at least one half.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log

import numpy as np

from .errors import InvalidBudget, InvalidEps, SingularGramian
from .system import LtiSystem, Schedule, controllability_matrix

PINV_CUTOFF = 1e-12
# Unspecified constant in the d = O(n log n / (eps^2 t)) budget; calibrated so
# the success-probability guarantee holds with margin on desk-scale instances.
BUDGET_CONSTANT = 4.0


@dataclass(frozen=True)
class LeverageTable:
    """scores[j, k] is the leverage of column A^k b_j; total is their sum."""

    scores: np.ndarray
    total: float


def leverage_scores(sys: LtiSystem, t: int) -> LeverageTable:
    """Column leverage scores of the controllability matrix.

    Uses the pseudo-inverse of C C^T so rank-deficient (uncontrollable)
    systems are allowed; the total then equals rank(C) instead of n.
    Computed from the SVD of C with a relative singular-value cutoff, which
    keeps scores accurate even when C C^T is numerically ill conditioned.
    """
    C = controllability_matrix(sys, t)
    _, sv, Vt = np.linalg.svd(C, full_matrices=False)
    keep = sv > PINV_CUTOFF * sv[0]
    flat = np.einsum("ij,ij->j", Vt[keep], Vt[keep])
    scores = np.clip(flat, 0.0, 1.0).reshape(t, sys.m).T
    return LeverageTable(scores=scores, total=float(flat.sum()))


def group_leverage(sys: LtiSystem, t: int, input_index: int) -> float:
    """Leverage of the whole column group of one input (row sum of the table)."""
    if not 0 <= input_index < sys.m:
        raise IndexError(f"input index {input_index} out of range [0, {sys.m})")
    table = leverage_scores(sys, t)
    return float(table.scores[input_index].sum())


def sampling_distribution(sys: LtiSystem, t: int) -> np.ndarray:
    """Probability grid pi[i, k] over (input, schedule time) pairs.

    pi[i, k] is the leverage of the column activated at schedule time k
    (power t-k-1) divided by n; requires a controllable system so the grid
    normalizes to 1.
    """
    table = leverage_scores(sys, t)
    n = sys.n
    if table.total < n - 1e-6:
        raise SingularGramian(
            f"leverage total {table.total:.6f} < n={n}: system uncontrollable, "
            "sampling distribution does not normalize"
        )
    return table.scores[:, ::-1] / n


def sample_schedule(sys: LtiSystem, t: int, d: float, seed: int,
                    amplitude_accumulation: bool = False) -> Schedule:
    """Randomized schedule from ceil(d*t) leverage-score draws.

    Each draw adds 1/(M pi) to the squared scaling of the drawn cell, which
    makes the scheduled Gramian an unbiased estimator of the full one.
    ``amplitude_accumulation=True`` instead adds the increment to the scaling
    itself (a biased variant kept for compatibility with conventions that
    accumulate amplitudes).

    Draws use a seeded PCG64 generator and inverse-CDF lookup over the
    row-major (input-major) flattened probability grid; the seed fully
    determines the output.
    """
    if d <= 0:
        raise InvalidBudget(f"budget d must be positive, got {d}")
    pi = sampling_distribution(sys, t)
    M = ceil(d * t)
    flat = pi.reshape(-1)
    cdf = np.cumsum(flat)
    cdf[-1] = 1.0
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(M), side="right")
    draws = np.minimum(draws, flat.size - 1)

    acc = np.zeros(flat.size)
    np.add.at(acc, draws, 1.0 / (M * flat[draws]))
    grid = acc.reshape(pi.shape)
    s = grid if amplitude_accumulation else np.sqrt(grid)
    return Schedule(s=s)


def theorem8_budget(n: int, t: int, eps: float) -> float:
    """Average budget d = c0 n ln(n) / (eps^2 t) for the probability-1/2 guarantee."""
    if not 1.0 / np.sqrt(n) <= eps < 1.0:
        raise InvalidEps(f"eps must lie in [1/sqrt(n), 1), got {eps}")
    return BUDGET_CONSTANT * n * log(n) / (eps ** 2 * t)
