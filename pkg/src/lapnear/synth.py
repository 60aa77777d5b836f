"""Synthetic test instances: small-world structure, random weights, noise.

An instance is built in a fixed draw order from one seeded stream
(:class:`lapnear.rng.SplitMix64`):

1. Watts-Strogatz structure: ring lattice of even mean degree, each
   lattice edge's clockwise endpoint rewired with the given probability.
2. One weight 10*u (u uniform on (0, 1), zeros resampled) per directed
   edge, in row-major edge order.  Weights are not symmetrized.
3. The true Laplacian: negated weights off the diagonal, each diagonal
   entry set to the row's total outgoing weight.
4. The observation: the true Laplacian plus scale * standard normal noise
   in every position, rows drawn in order (each row consumes
   2 * ceil(n / 2) uniforms, see ``SplitMix64.normal``).

Everything is bitwise reproducible from (n, k, beta, s, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .matrices import MAX_DENSE_N, EdgeSet
from .rng import MAX_SEED, SplitMix64


@dataclass(frozen=True)
class SynthParams:
    """Generation parameters: nodes, even mean degree, rewiring probability,
    noise scale, and the 64-bit stream seed."""

    n: int
    k: int
    beta: float
    s: float
    seed: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        if self.k % 2 != 0 or not 2 <= self.k < self.n:
            raise ValueError(f"mean degree must be even with 2 <= k < n, got k={self.k}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"rewiring probability must be in [0, 1], got {self.beta}")
        if not self.s >= 0.0:
            raise ValueError(f"noise scale must be >= 0, got {self.s}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class SynthInstance:
    """Generated pair: the true Laplacian and its noisy observation."""

    params: SynthParams
    edges: EdgeSet
    true_laplacian: np.ndarray
    observed: np.ndarray


def watts_strogatz(n: int, k: int, beta: float, rng: SplitMix64) -> EdgeSet:
    """Small-world structure on ``n`` nodes with ``n*k/2`` undirected edges.

    Starts from the ring lattice joining each node to its k/2 nearest
    neighbours on either side.  Lattice edges are visited ring by ring
    (offset h = 1..k/2, node i = 0..n-1); each visit consumes one uniform
    and, when it falls below ``beta``, moves the edge's far endpoint
    (i, i+h) -> (i, t) with t drawn uniformly until it is neither i nor a
    current neighbour of i.  Nodes already joined to everyone are left
    alone.  The result is symmetric: both directions of every undirected
    edge are present.
    """
    if k % 2 != 0 or not 2 <= k < n:
        raise ValueError(f"mean degree must be even with 2 <= k < n, got k={k}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"rewiring probability must be in [0, 1], got {beta}")

    neighbours = [set() for _ in range(n)]
    for h in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + h) % n
            neighbours[i].add(j)
            neighbours[j].add(i)

    for h in range(1, k // 2 + 1):
        for i in range(n):
            if rng.uniform1() >= beta:
                continue
            if len(neighbours[i]) >= n - 1:
                continue
            j = (i + h) % n
            t = rng.integer_below(n)
            while t == i or t in neighbours[i]:
                t = rng.integer_below(n)
            neighbours[i].discard(j)
            neighbours[j].discard(i)
            neighbours[i].add(t)
            neighbours[t].add(i)

    pairs = frozenset(
        (i, j) for i in range(n) for j in neighbours[i]
    )
    return EdgeSet(n, pairs)


def generate_instance(params: SynthParams) -> SynthInstance:
    """Build the (true Laplacian, observation) pair for ``params``."""
    n = params.n
    if n > MAX_DENSE_N:
        raise DimensionError(f"instance size {n} exceeds dense cap {MAX_DENSE_N}")
    rng = SplitMix64(params.seed)
    edges = watts_strogatz(n, params.k, params.beta, rng)

    rows, cols = edges.index_arrays()
    weights = 10.0 * _positive_uniform(rng, len(rows))

    L = np.zeros((n, n))
    L[rows, cols] = -weights
    # Diagonal = total outgoing weight, summed in ascending column order.
    degree = -L.sum(axis=1)
    degree[degree == 0.0] = 0.0  # isolated rows get +0.0, not -0.0
    np.fill_diagonal(L, degree)

    A = L.copy()
    if params.s > 0.0:
        for i in range(n):
            A[i] += params.s * rng.normal(n)

    return SynthInstance(params=params, edges=edges, true_laplacian=L, observed=A)


def _positive_uniform(rng: SplitMix64, size: int) -> np.ndarray:
    """Uniform draws on the open interval (0, 1): exact zeros are redrawn."""
    u = rng.uniform(size)
    while True:
        zeros = np.nonzero(u == 0.0)[0]
        if zeros.size == 0:
            return u
        u[zeros] = rng.uniform(zeros.size)
