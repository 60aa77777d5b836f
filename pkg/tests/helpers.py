"""Shared generators and independent oracles used across the test suite."""

import numpy as np

from lapnear import EdgeSet
from lapnear.rng import SplitMix64


def random_structure(rng: SplitMix64, n: int, density: float) -> EdgeSet:
    """Each ordered pair kept independently with the given probability."""
    edges = set()
    for i in range(n):
        for j in range(n):
            if i != j and rng.uniform1() < density:
                edges.add((i, j))
    return EdgeSet(n, frozenset(edges))


def random_square(rng: SplitMix64, n: int, scale: float = 1.0) -> np.ndarray:
    return scale * rng.normal(n * n).reshape(n, n)


def l1_rowmajor(A: np.ndarray, B: np.ndarray) -> float:
    """Reference 1-norm distance: exact compensated sum in row-major order."""
    import math

    return math.fsum(abs(a - b) for a, b in zip(A.ravel(), B.ravel()))


def grid_laplacian_objective_2x2(A: np.ndarray, limit: float = 3.0, steps: int = 601):
    """Brute-force optimum over feasible 2x2 Laplacians on the complete graph.

    Every feasible matrix has the form [[a, -a], [-b, b]] with a, b >= 0,
    so a dense grid over (a, b) bounds the optimum from above.
    """
    a = np.linspace(0.0, limit, steps)
    b = np.linspace(0.0, limit, steps)
    av, bv = np.meshgrid(a, b, indexing="ij")
    obj = (
        np.abs(A[0, 0] - av)
        + np.abs(A[0, 1] + av)
        + np.abs(A[1, 0] + bv)
        + np.abs(A[1, 1] - bv)
    )
    return float(obj.min())


def grid_row_optimum(a, i, steps=13):
    """Brute-force row minimizer of the squared error over the feasible set.

    Off-diagonal entries range over nonpositive grids wide enough to
    bracket the optimum; the diagonal entry is forced by the zero-sum
    constraint, and grid points where it would go negative are discarded.
    Returns (best objective, best point, coarsest grid step).
    """
    n = len(a)
    others = [j for j in range(n) if j != i]
    span = float(np.abs(a).sum()) + 1.0
    axes = [np.linspace(min(a[j] - span, -span), 0.0, steps) for j in others]
    grids = np.meshgrid(*axes, indexing="ij")
    flat = [g.ravel() for g in grids]
    diag = -sum(flat)
    err = (diag - a[i]) ** 2
    for j, g in zip(others, flat):
        err = err + (g - a[j]) ** 2
    err = np.where(diag >= 0.0, err, np.inf)
    at = int(err.argmin())
    best = float(err[at])
    values = np.empty(n)
    values[i] = diag[at]
    for j, g in zip(others, flat):
        values[j] = g[at]
    step = max(float(ax[1] - ax[0]) for ax in axes)
    return best, values, step


def charpoly_coefficients(M: np.ndarray) -> np.ndarray:
    """Characteristic polynomial coefficients via the Faddeev-LeVerrier
    recurrence (trace-based, no eigenvalue machinery)."""
    n = M.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    N = np.zeros_like(M)
    eye = np.eye(n)
    for k in range(1, n + 1):
        N = M @ (N + coeffs[k - 1] * eye) if k > 1 else M.copy()
        coeffs[k] = -np.trace(N) / k
    return coeffs


def charpoly_roots(M: np.ndarray) -> np.ndarray:
    """Eigenvalue oracle: roots of the Faddeev-LeVerrier characteristic
    polynomial, found by the companion-matrix root finder."""
    return np.roots(charpoly_coefficients(M))


def match_sorted(a: np.ndarray, b: np.ndarray) -> float:
    """Max distance between two complex multisets under optimal matching."""
    from scipy.optimize import linear_sum_assignment

    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())
