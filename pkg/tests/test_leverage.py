from math import ceil

import numpy as np
import pytest

from actsched import (
    InvalidBudget,
    InvalidEps,
    SingularGramian,
    controllability_matrix,
    gramian,
    group_leverage,
    leverage_scores,
    sample_schedule,
    sampling_distribution,
    scheduled_gramian,
    theorem8_budget,
)
from conftest import random_controllable_system, random_uncontrollable_system


def test_scores_range_and_total():
    rng = np.random.default_rng(50)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(1, 4))
        t = int(rng.integers(n, 2 * n + 1))
        sys = random_controllable_system(rng, n, m, t)
        table = leverage_scores(sys, t)
        assert table.scores.shape == (m, t)
        assert np.all(table.scores >= 0) and np.all(table.scores <= 1)
        assert table.total == pytest.approx(n, abs=1e-8)


def test_scores_total_equals_rank_when_deficient():
    rng = np.random.default_rng(51)
    for _ in range(10):
        sys = random_uncontrollable_system(rng, 5, 2)
        C = controllability_matrix(sys, 5)
        rank = np.linalg.matrix_rank(C)
        table = leverage_scores(sys, 5)
        assert table.total == pytest.approx(rank, abs=1e-8)


def test_group_leverage_is_row_sum():
    rng = np.random.default_rng(52)
    sys = random_controllable_system(rng, 4, 3, 6)
    table = leverage_scores(sys, 6)
    for i in range(3):
        assert group_leverage(sys, 6, i) == pytest.approx(table.scores[i].sum())
    with pytest.raises(IndexError):
        group_leverage(sys, 6, 3)


def test_distribution_normalizes_and_reverses_time():
    rng = np.random.default_rng(53)
    sys = random_controllable_system(rng, 4, 2, 8)
    pi = sampling_distribution(sys, 8)
    assert pi.sum() == pytest.approx(1.0, abs=1e-10)
    table = leverage_scores(sys, 8)
    np.testing.assert_allclose(pi, table.scores[:, ::-1] / 4)


def test_distribution_rejects_uncontrollable():
    rng = np.random.default_rng(54)
    sys = random_uncontrollable_system(rng, 4, 2)
    with pytest.raises(SingularGramian):
        sampling_distribution(sys, 6)


def test_sampling_determinism_and_support():
    rng = np.random.default_rng(55)
    sys = random_controllable_system(rng, 4, 3, 8)
    s1 = sample_schedule(sys, 8, 2.0, seed=7)
    s2 = sample_schedule(sys, 8, 2.0, seed=7)
    np.testing.assert_array_equal(s1.s, s2.s)
    s3 = sample_schedule(sys, 8, 2.0, seed=8)
    assert np.any(s1.s != s3.s)
    assert s1.support_size <= ceil(2.0 * 8)
    with pytest.raises(InvalidBudget):
        sample_schedule(sys, 8, 0.0, seed=1)


def test_estimator_is_unbiased():
    rng = np.random.default_rng(56)
    sys = random_controllable_system(rng, 3, 2, 6)
    t, d = 6, 3.0
    W = gramian(sys, t)
    acc = np.zeros_like(W)
    trials = 400
    for seed in range(trials):
        sched = sample_schedule(sys, t, d, seed)
        acc += scheduled_gramian(sys, sched, t)
    err = np.linalg.norm(acc / trials - W) / np.linalg.norm(W)
    assert err < 0.1


def test_amplitude_accumulation_flag_changes_output():
    rng = np.random.default_rng(57)
    sys = random_controllable_system(rng, 3, 2, 6)
    plain = sample_schedule(sys, 6, 3.0, seed=3)
    amp = sample_schedule(sys, 6, 3.0, seed=3, amplitude_accumulation=True)
    mask = plain.s > 0
    np.testing.assert_array_equal(mask, amp.s > 0)
    np.testing.assert_allclose(amp.s[mask], plain.s[mask] ** 2, atol=1e-12)


def test_budget_formula_and_eps_domain():
    n, t = 6, 12
    d = theorem8_budget(n, t, 0.5)
    assert d == pytest.approx(4.0 * n * np.log(n) / (0.25 * t))
    with pytest.raises(InvalidEps):
        theorem8_budget(n, t, 0.1)   # below 1/sqrt(n)
    with pytest.raises(InvalidEps):
        theorem8_budget(n, t, 1.0)
