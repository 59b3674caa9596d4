"""Shared helpers for building random test systems."""

from __future__ import annotations

import numpy as np

from actsched import LtiSystem, controllability_matrix


def random_stable_matrix(rng: np.random.Generator, n: int,
                         spectral_radius: float = 0.9) -> np.ndarray:
    A = rng.standard_normal((n, n))
    radius = float(np.max(np.abs(np.linalg.eigvals(A))))
    return A * (spectral_radius / max(radius, 1e-12))


def random_controllable_system(rng: np.random.Generator, n: int, m: int,
                               t: int | None = None) -> LtiSystem:
    """Random system whose controllability matrix is well conditioned."""
    t = t if t is not None else n
    while True:
        sys = LtiSystem(A=random_stable_matrix(rng, n),
                        B=rng.standard_normal((n, m)))
        sv = np.linalg.svd(controllability_matrix(sys, t), compute_uv=False)
        if sv[-1] > 1e-6 * sv[0]:
            return sys


def random_uncontrollable_system(rng: np.random.Generator, n: int,
                                 m: int) -> LtiSystem:
    """Block system whose second state block is unreachable from the inputs."""
    assert n >= 2
    k = rng.integers(1, n)
    A = np.zeros((n, n))
    A[:k, :k] = random_stable_matrix(rng, k) if k > 1 else rng.uniform(-0.9, 0.9)
    A[k:, k:] = (random_stable_matrix(rng, n - k)
                 if n - k > 1 else rng.uniform(-0.9, 0.9))
    B = np.zeros((n, m))
    B[:k, :] = rng.standard_normal((k, m))
    return LtiSystem(A=A, B=B)


def random_spd(rng: np.random.Generator, n: int,
               condition: float = 100.0) -> np.ndarray:
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    eig = np.exp(rng.uniform(0.0, np.log(condition), n))
    return (Q * eig) @ Q.T


def random_orthonormal_rows(rng: np.random.Generator, rows: int,
                            cols: int) -> np.ndarray:
    """rows x cols matrix M with M M^T = I (requires rows <= cols)."""
    Q, _ = np.linalg.qr(rng.standard_normal((cols, rows)))
    return Q.T
