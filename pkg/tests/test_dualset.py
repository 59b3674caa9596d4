from math import sqrt

import numpy as np
import pytest

from actsched import (
    BarrierViolation,
    DecompositionPair,
    InvalidBudget,
    dual_set,
    lower_barrier_phi,
    upper_barrier_phi,
)
from actsched.dualset import lower_gain, upper_gain
from conftest import random_orthonormal_rows


def test_pair_validation():
    rng = np.random.default_rng(20)
    V = random_orthonormal_rows(rng, 3, 8)
    U = random_orthonormal_rows(rng, 5, 8)
    pair = DecompositionPair(lower=V, upper=U)
    assert (pair.n, pair.t, pair.ell) == (3, 8, 5)
    assert DecompositionPair(lower=V, upper=None).ell == 8
    with pytest.raises(ValueError):
        DecompositionPair(lower=2 * V, upper=None)
    with pytest.raises(ValueError):
        DecompositionPair(lower=V, upper=random_orthonormal_rows(rng, 2, 7))


def test_barrier_potentials():
    M = np.diag([1.0, 2.0, 5.0])
    assert lower_barrier_phi(0.0, M) == pytest.approx(1.0 + 0.5 + 0.2)
    assert upper_barrier_phi(6.0, M) == pytest.approx(1 / 5 + 1 / 4 + 1.0)
    with pytest.raises(BarrierViolation):
        lower_barrier_phi(1.5, M)
    with pytest.raises(BarrierViolation):
        upper_barrier_phi(4.0, M)


def test_gains_match_rank_one_potential_difference():
    # adding weight w = 1/gain along v should move the potential back to its
    # pre-shift value; check the defining identities directly
    rng = np.random.default_rng(21)
    n = 4
    M = np.cov(rng.standard_normal((n, 30)))
    v = rng.standard_normal(n)
    eig = np.linalg.eigvalsh(M)
    mu, delta = eig[0] - 2.0, 0.5
    g = lower_gain(v, M, mu, delta)
    w = 1.0 / g
    shifted = lower_barrier_phi(mu + delta, M + w * np.outer(v, v))
    assert shifted <= lower_barrier_phi(mu, M) + 1e-10

    mu_up = eig[-1] + 2.0
    gu = upper_gain(v, M, mu_up, delta)
    wu = 1.0 / gu
    shifted_up = upper_barrier_phi(mu_up + delta, M + wu * np.outer(v, v))
    assert shifted_up <= upper_barrier_phi(mu_up, M) + 1e-10


def test_budget_validation():
    rng = np.random.default_rng(22)
    V = random_orthonormal_rows(rng, 3, 10)
    with pytest.raises(InvalidBudget):
        dual_set(V, None, 3)
    with pytest.raises(InvalidBudget):
        dual_set(V, None, 11)


def test_dual_set_determinism():
    rng = np.random.default_rng(23)
    V = random_orthonormal_rows(rng, 4, 15)
    U = random_orthonormal_rows(rng, 6, 15)
    c1 = dual_set(V, U, 9)
    c2 = dual_set(V, U, 9)
    np.testing.assert_array_equal(c1, c2)


def test_dual_set_bounds_dense_and_diagonal_upper():
    rng = np.random.default_rng(24)
    for trial in range(10):
        n = int(rng.integers(2, 6))
        t = int(rng.integers(n + 4, 30))
        V = random_orthonormal_rows(rng, n, t)
        if trial % 2 == 0:
            U, ell = None, t
        else:
            ell = int(rng.integers(n, t + 1))
            U = random_orthonormal_rows(rng, ell, t)
        kappa = int(rng.integers(n + 1, t + 1))
        c = dual_set(V, U, kappa)
        assert np.all(c >= 0)
        assert np.count_nonzero(c) <= kappa
        lo = np.linalg.eigvalsh((V * c) @ V.T)[0]
        assert lo >= (1 - sqrt(n / kappa)) ** 2 - 1e-8
        Umat = np.eye(t) if U is None else U
        hi = np.linalg.eigvalsh((Umat * c) @ Umat.T)[-1]
        assert hi <= (1 + sqrt(ell / kappa)) ** 2 + 1e-8


def test_diagonal_fast_path_matches_explicit_identity():
    rng = np.random.default_rng(25)
    V = random_orthonormal_rows(rng, 3, 12)
    c_fast = dual_set(V, None, 8)
    c_dense = dual_set(V, np.eye(12), 8)
    np.testing.assert_allclose(c_fast, c_dense, atol=1e-10)
