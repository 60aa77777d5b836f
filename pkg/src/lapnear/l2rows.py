"""Row-wise least-squares (entrywise 2-norm) counterparts of the projection.

For the squared 2-norm objective the zero-row-sum repair no longer
decouples from the sign constraints, so there is no general clip-and-fix
sweep.  What does exist in closed form:

* projection of a vector onto the zero-sum hyperplane (subtract the mean),
* the per-row solution on a complete graph when the row of ``A`` already
  satisfies the sign pattern and has nonnegative sum.

When the row sum is negative the mean-shift solution can violate the
nonpositivity of off-diagonal entries, so the closed form is reported as
inapplicable rather than patched up.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RowSolution:
    """Closed-form row optimum, or ``applicable=False`` when it breaks a sign."""

    values: np.ndarray | None
    applicable: bool


def _as_vector(a, what: str = "vector") -> np.ndarray:
    v = np.asarray(a, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"{what} must be one-dimensional, got shape {v.shape}")
    if v.size == 0:
        raise ValueError(f"{what} must be nonempty")
    if not np.isfinite(v).all():
        raise ValueError(f"{what} contains NaN or Inf entries")
    return v


def zero_sum_projection(a) -> np.ndarray:
    """Nearest zero-sum vector in the 2-norm: subtract the mean."""
    v = _as_vector(a)
    return v - v.mean()


def complete_graph_l2_row(a_row, i: int) -> RowSolution:
    """Least-squares zero-sum row on a complete graph, sign pattern kept.

    ``a_row`` must already satisfy the row sign pattern (``a_row[i] >= 0``,
    other entries ``<= 0``); violating that is a caller error.  If the row
    sum is nonnegative, subtracting the mean preserves the pattern and is
    the unique optimum.  A negative row sum makes the mean shift push
    off-diagonal entries positive, so no closed form applies and
    ``applicable=False`` is returned (a normal outcome, not an error).
    """
    v = _as_vector(a_row, "row")
    n = v.size
    if not 0 <= i < n:
        raise ValueError(f"row index {i} out of range for length {n}")
    if v[i] < 0:
        raise ValueError(f"diagonal entry a[{i}]={v[i]} must be nonnegative")
    others = np.delete(v, i)
    if others.size and others.max() > 0:
        raise ValueError("off-diagonal entries must be nonpositive")

    if v.sum() < 0:
        return RowSolution(values=None, applicable=False)
    return RowSolution(values=zero_sum_projection(v), applicable=True)
