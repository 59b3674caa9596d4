"""Benchmark model builders.

Three families of test systems: a fixed 8-state system whose sparsest
diagonal input matrix is known, consensus dynamics over random geometric
graphs in the unit square, and discretized swing dynamics for a small
power network.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .system import LtiSystem


def example1_system(b: str = "identity") -> LtiSystem:
    """Fixed 8-state upper/lower-patterned system with known sparse actuation.

    ``b="identity"`` gives the fully actuated pair; ``b="minimal"`` gives
    the sparsest diagonal input matrix diag(1, 1, 0, 0, 0, 0, 0, 1) that
    keeps the pair controllable.  All entries are exact binary fractions.
    """
    A = np.array([
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -3.5],
        [0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, -3.0],
        [0.0, 0.0, 3.0, 0.0, 0.0, 0.0, 0.0, -2.5],
        [0.75, 0.5, 0.0, 4.0, 0.0, 0.0, 0.0, 1.625],
        [0.0, 0.75, 0.5, 0.0, 5.0, 0.0, 0.0, 1.375],
        [1.25, 0.0, 0.75, 0.0, 0.0, 6.0, 0.0, 1.5],
        [1.5, 1.25, 1.0, 0.0, 0.0, 0.0, 7.0, 2.25],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 8.0],
    ])
    if b == "identity":
        B = np.eye(8)
    elif b == "minimal":
        B = np.diag([1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0])
    else:
        raise ValueError(f"b must be 'identity' or 'minimal', got {b!r}")
    return LtiSystem(A=A, B=B)


@dataclass(frozen=True)
class GeometricGraph:
    """Random geometric graph on the unit square with its Laplacian."""

    positions: np.ndarray  # (n, 2) points
    radius: float
    laplacian: np.ndarray  # (n, n) graph Laplacian

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    @property
    def edge_count(self) -> int:
        return int(np.round(np.trace(self.laplacian))) // 2

    def is_connected(self) -> bool:
        eig = np.linalg.eigvalsh(self.laplacian)
        return bool(eig[1] > 1e-10 * max(eig[-1], 1.0)) if self.n > 1 else True


def random_geometric_graph(n: int, radius: float, seed: int) -> GeometricGraph:
    """n uniform points in the unit square, edges within a closed ball."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if radius <= 0:
        raise ValueError(f"need radius > 0, got {radius}")
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.sum(diff ** 2, axis=-1))
    adj = (dist <= radius).astype(float)
    np.fill_diagonal(adj, 0.0)
    L = np.diag(adj.sum(axis=1)) - adj
    return GeometricGraph(positions=pts, radius=float(radius), laplacian=L)


def consensus_system(graph: GeometricGraph) -> LtiSystem:
    """Discrete consensus dynamics A = I - L/n with every node actuated."""
    n = graph.n
    A = np.eye(n) - graph.laplacian / n
    return LtiSystem(A=A, B=np.eye(n))


@dataclass(frozen=True)
class SwingParameters:
    """Inertia, damping, and coupling of a generator network."""

    inertia: np.ndarray    # diagonal entries, length n_g, positive
    damping: np.ndarray    # diagonal entries, length n_g, positive
    laplacian: np.ndarray  # (n_g, n_g) coupling Laplacian
    sample_time: float

    def __post_init__(self):
        m = np.asarray(self.inertia, dtype=float)
        d = np.asarray(self.damping, dtype=float)
        L = np.asarray(self.laplacian, dtype=float)
        object.__setattr__(self, "inertia", m)
        object.__setattr__(self, "damping", d)
        object.__setattr__(self, "laplacian", L)
        if np.any(m <= 0):
            raise ValueError("inertias must be positive")
        if np.any(d < 0):
            raise ValueError("dampings must be nonnegative")
        if L.shape != (m.size, m.size):
            raise ValueError("laplacian shape does not match generator count")
        if self.sample_time <= 0:
            raise ValueError("sample time must be positive")

    @property
    def n_generators(self) -> int:
        return self.inertia.size


def default_swing_parameters(n_generators: int = 10,
                             damping: float = 0.1,
                             sample_time: float = 0.2) -> SwingParameters:
    """Ring of generators with two long chords, unit inertias.

    A light stand-in for a reduced ten-machine network: nearest-neighbor
    coupling around a cycle plus chords (0, n/2) and (n/4, 3n/4) so the
    graph is not a plain ring.
    """
    n = int(n_generators)
    adj = np.zeros((n, n))
    for i in range(n):
        adj[i, (i + 1) % n] = adj[(i + 1) % n, i] = 1.0
    if n >= 4:
        for u, v in ((0, n // 2), (n // 4, 3 * n // 4)):
            if u != v:
                adj[u, v] = adj[v, u] = 1.0
    L = np.diag(adj.sum(axis=1)) - adj
    return SwingParameters(inertia=np.ones(n),
                           damping=np.full(n, damping),
                           laplacian=L,
                           sample_time=sample_time)


def swing_system(params: SwingParameters) -> LtiSystem:
    """Zero-order-hold discretization of second-order swing dynamics.

    Continuous dynamics M theta'' + D theta' = -L theta + u in first-order
    form over the state (theta, theta'), discretized exactly through the
    exponential of the augmented matrix [[A_c, B_c], [0, 0]].
    """
    ng = params.n_generators
    Minv = 1.0 / params.inertia
    Ac = np.block([
        [np.zeros((ng, ng)), np.eye(ng)],
        [-Minv[:, None] * params.laplacian, -np.diag(Minv * params.damping)],
    ])
    Bc = np.vstack([np.zeros((ng, ng)), np.diag(Minv)])
    n = 2 * ng
    aug = np.zeros((n + ng, n + ng))
    aug[:n, :n] = Ac
    aug[:n, n:] = Bc
    E = expm(params.sample_time * aug)
    return LtiSystem(A=E[:n, :n], B=E[:n, n:])
