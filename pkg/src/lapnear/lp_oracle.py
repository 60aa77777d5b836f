"""Linear-programming certification of the nearest-Laplacian construction.

The 1-norm nearness problem is restated as a linear program with one
variable per free matrix entry plus one auxiliary variable per entry for
the absolute value, and solved by a dense two-phase tableau simplex with
Bland's anti-cycling rule.  The solver is deliberately simple and
independent of the O(n^2) construction in :mod:`lapnear.projection`; at
small sizes agreement of the two objective values certifies global
optimality of the fast path.  The LP route scales terribly (that is the
point of having the fast path), so it is capped at ``ORACLE_MAX_N``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericalError
from .matrices import EdgeSet, as_square_matrix

ORACLE_MAX_N = 30

# Tableau coefficients below this are treated as exact zeros.
PIVOT_TOL = 1e-11
# Reduced costs above -REDUCED_COST_TOL count as optimal.
REDUCED_COST_TOL = 1e-9
# Phase-1 objective above this (scaled) means the problem is infeasible.
FEAS_TOL = 1e-8

DEFAULT_MAX_ITERS = 50_000

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
ITERATION_LIMIT = "iteration_limit"


@dataclass(frozen=True)
class LpProblem:
    """Minimize ``objective_coeffs @ x + objective_constant`` subject to
    ``eq_matrix @ x == eq_rhs``, ``ge_matrix @ x >= ge_rhs``, and
    per-variable bounds (entries of the bound arrays may be +-inf)."""

    num_vars: int
    objective_coeffs: np.ndarray
    eq_matrix: np.ndarray
    eq_rhs: np.ndarray
    ge_matrix: np.ndarray
    ge_rhs: np.ndarray
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    objective_constant: float = 0.0

    def __post_init__(self):
        n = self.num_vars
        if n < 1:
            raise ValueError("an LP needs at least one variable")

        def fix(name, value, shape, allow_inf):
            arr = np.asarray(value, dtype=np.float64)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            if not allow_inf and not np.isfinite(arr).all():
                raise ValueError(f"{name} contains NaN or Inf")
            if allow_inf and np.isnan(arr).any():
                raise ValueError(f"{name} contains NaN")
            object.__setattr__(self, name, arr)

        fix("objective_coeffs", self.objective_coeffs, (n,), False)
        eq = np.asarray(self.eq_matrix, dtype=np.float64).reshape(-1, n)
        ge = np.asarray(self.ge_matrix, dtype=np.float64).reshape(-1, n)
        object.__setattr__(self, "eq_matrix", eq)
        object.__setattr__(self, "ge_matrix", ge)
        fix("eq_rhs", self.eq_rhs, (eq.shape[0],), False)
        fix("ge_rhs", self.ge_rhs, (ge.shape[0],), False)
        if not np.isfinite(eq).all() or not np.isfinite(ge).all():
            raise ValueError("constraint matrices contain NaN or Inf")
        fix("lower_bounds", self.lower_bounds, (n,), True)
        fix("upper_bounds", self.upper_bounds, (n,), True)
        bad = self.lower_bounds > self.upper_bounds
        if bad.any():
            raise ValueError(f"lower bound exceeds upper bound at variable {bad.argmax()}")


@dataclass(frozen=True)
class LpSolution:
    """Solver outcome; ``variable_values`` is None unless status is optimal."""

    status: str
    objective_value: float
    variable_values: np.ndarray | None
    iterations: int


def _standard_form(p: LpProblem):
    """Rewrite with all variables >= 0 and equality rows only.

    Returns (cost, body, rhs, basis_candidates, reconstruct) where
    ``reconstruct(y)`` maps standard-form values back to the original
    variables, and ``basis_candidates[r]`` is the surplus/slack column
    usable as the initial basic variable of row ``r`` (or -1).
    """
    columns = []  # per original variable: list of (column, sign)
    offsets = np.zeros(p.num_vars)
    range_rows = []  # (column_of_shifted_var, width) for two-sided bounds
    num_cols = 0
    for j in range(p.num_vars):
        lo, up = p.lower_bounds[j], p.upper_bounds[j]
        if np.isfinite(lo):
            columns.append([(num_cols, 1.0)])
            offsets[j] = lo
            if np.isfinite(up):
                range_rows.append((num_cols, up - lo))
            num_cols += 1
        elif np.isfinite(up):
            columns.append([(num_cols, -1.0)])
            offsets[j] = up
            num_cols += 1
        else:
            columns.append([(num_cols, 1.0), (num_cols + 1, -1.0)])
            num_cols += 2

    num_ge = p.ge_matrix.shape[0]
    num_range = len(range_rows)
    surplus_start = num_cols
    slack_start = num_cols + num_ge
    total_cols = num_cols + num_ge + num_range
    num_rows = p.eq_matrix.shape[0] + num_ge + num_range

    body = np.zeros((num_rows, total_cols))
    rhs = np.zeros(num_rows)
    candidates = np.full(num_rows, -1, dtype=int)

    def emit(r, coeffs, value):
        rhs[r] = value - float(coeffs @ offsets)
        for j in range(p.num_vars):
            c = coeffs[j]
            if c != 0.0:
                for col, sign in columns[j]:
                    body[r, col] += sign * c

    r = 0
    for i in range(p.eq_matrix.shape[0]):
        emit(r, p.eq_matrix[i], p.eq_rhs[i])
        r += 1
    for i in range(num_ge):
        emit(r, p.ge_matrix[i], p.ge_rhs[i])
        body[r, surplus_start + i] = -1.0
        candidates[r] = surplus_start + i
        r += 1
    for i, (col, width) in enumerate(range_rows):
        body[r, col] = 1.0
        body[r, slack_start + i] = 1.0
        rhs[r] = width
        candidates[r] = slack_start + i
        r += 1

    cost = np.zeros(total_cols)
    for j in range(p.num_vars):
        for col, sign in columns[j]:
            cost[col] += sign * p.objective_coeffs[j]

    def reconstruct(y: np.ndarray) -> np.ndarray:
        x = offsets.copy()
        for j in range(p.num_vars):
            for col, sign in columns[j]:
                x[j] += sign * y[col]
        return x

    return cost, body, rhs, candidates, reconstruct


def _bland_iterate(body, rhs, z, basis, max_iters):
    """Pivot with Bland's rule until optimal/unbounded/out of budget.

    Returns (outcome, pivots) where outcome is OPTIMAL, UNBOUNDED, or
    ITERATION_LIMIT.  Bland's rule (lowest eligible entering column,
    lowest basic-variable index on ratio ties) cannot cycle, so
    termination is guaranteed given enough budget.
    """
    pivots = 0
    while True:
        entering = -1
        for j in range(body.shape[1]):
            if z[j] < -REDUCED_COST_TOL:
                entering = j
                break
        if entering < 0:
            return OPTIMAL, pivots
        if pivots >= max_iters:
            return ITERATION_LIMIT, pivots

        column = body[:, entering]
        eligible = np.nonzero(column > PIVOT_TOL)[0]
        if eligible.size == 0:
            return UNBOUNDED, pivots
        ratios = rhs[eligible] / column[eligible]
        best = ratios.min()
        tied = eligible[ratios <= best + PIVOT_TOL]
        leaving = tied[np.argmin(basis[tied])]

        pivot = body[leaving, entering]
        body[leaving] /= pivot
        rhs[leaving] /= pivot
        factors = body[:, entering].copy()
        factors[leaving] = 0.0
        body -= np.outer(factors, body[leaving])
        rhs -= factors * rhs[leaving]
        zf = z[entering]
        z -= zf * body[leaving]
        basis[leaving] = entering
        pivots += 1


def simplex_solve(problem: LpProblem, max_iters: int = DEFAULT_MAX_ITERS) -> LpSolution:
    """Solve ``problem`` with a dense two-phase tableau simplex.

    Deterministic for identical input: variable order, row order, and
    Bland's pivoting rule leave no free choices.
    """
    cost, body, rhs, candidates, reconstruct = _standard_form(problem)
    num_rows, num_real = body.shape

    # Normalize to rhs >= 0; a negated `>=` row turns its surplus into a
    # usable +1 basis column.
    for r in range(num_rows):
        if rhs[r] < 0:
            body[r] = -body[r]
            rhs[r] = -rhs[r]

    basis = np.full(num_rows, -1, dtype=int)
    artificial_rows = []
    for r in range(num_rows):
        c = candidates[r]
        if c >= 0 and abs(body[r, c] - 1.0) <= PIVOT_TOL:
            basis[r] = c
        else:
            artificial_rows.append(r)

    if artificial_rows:
        art = np.zeros((num_rows, len(artificial_rows)))
        for k, r in enumerate(artificial_rows):
            art[r, k] = 1.0
            basis[r] = num_real + k
        body = np.hstack([body, art])

    iterations = 0
    scale = 1.0 + float(np.abs(rhs).max(initial=0.0))

    if artificial_rows:
        # Phase 1: minimize the sum of artificial variables.
        z = np.zeros(body.shape[1])
        z[num_real:] = 1.0
        for r in range(num_rows):
            if basis[r] >= num_real:
                z -= body[r]
        outcome, pivots = _bland_iterate(body, rhs, z, basis, max_iters)
        iterations += pivots
        if outcome == ITERATION_LIMIT:
            return LpSolution(ITERATION_LIMIT, float("nan"), None, iterations)
        if outcome == UNBOUNDED:
            raise NumericalError("phase-1 objective unbounded: numerical breakdown")
        residual = sum(rhs[r] for r in range(num_rows) if basis[r] >= num_real)
        if residual > FEAS_TOL * scale:
            return LpSolution(INFEASIBLE, float("nan"), None, iterations)

        # Pivot leftover artificials out of the basis; rows that cannot
        # pivot are redundant and get dropped.
        keep = np.ones(num_rows, dtype=bool)
        for r in range(num_rows):
            if basis[r] >= num_real:
                nonzero = np.nonzero(np.abs(body[r, :num_real]) > PIVOT_TOL)[0]
                if nonzero.size == 0:
                    keep[r] = False
                    continue
                entering = int(nonzero[0])
                pivot = body[r, entering]
                body[r] /= pivot
                rhs[r] /= pivot
                factors = body[:, entering].copy()
                factors[r] = 0.0
                body -= np.outer(factors, body[r])
                rhs -= factors * rhs[r]
                basis[r] = entering
        body = body[keep][:, :num_real]
        rhs = rhs[keep]
        basis = basis[keep]

    # Phase 2 on the real cost vector.
    z = cost.copy()
    for r in range(body.shape[0]):
        z -= cost[basis[r]] * body[r]
    outcome, pivots = _bland_iterate(body, rhs, z, basis, max_iters - iterations)
    iterations += pivots
    if outcome == ITERATION_LIMIT:
        return LpSolution(ITERATION_LIMIT, float("nan"), None, iterations)
    if outcome == UNBOUNDED:
        return LpSolution(UNBOUNDED, float("-inf"), None, iterations)

    y = np.zeros(num_real)
    y[basis] = rhs
    x = reconstruct(y)
    objective = float(problem.objective_coeffs @ x + problem.objective_constant)
    return LpSolution(OPTIMAL, objective, x, iterations)


def _check_oracle_size(n: int) -> None:
    if n > ORACLE_MAX_N:
        raise DimensionError(
            f"LP oracle is capped at n={ORACLE_MAX_N} (dense simplex); got n={n}"
        )


def build_nearness_lp(A, edges: EdgeSet) -> LpProblem:
    """Linear program whose optimum is the nearest-Laplacian distance.

    Variable layout (documented for reconstruction): diagonal entries
    L_ii for i = 0..n-1, then L_ij for edges in row-major order, then one
    absolute-value variable t per entry in the same order.  Off-diagonal
    positions outside the edge set carry no variables; they are pinned at
    zero, so each contributes the constant |A_ij| to the objective.
    """
    A = as_square_matrix(A)
    n = A.shape[0]
    if edges.n != n:
        raise DimensionError(f"matrix is {n}x{n} but edge structure has n={edges.n}")
    _check_oracle_size(n)

    pairs = edges.sorted_pairs()
    m = len(pairs)
    num_entry = n + m  # diagonal entries then edge entries
    num_vars = 2 * num_entry

    lower = np.zeros(num_vars)
    upper = np.full(num_vars, np.inf)
    lower[n : n + m] = -np.inf
    upper[n : n + m] = 0.0

    targets = np.empty(num_entry)
    targets[:n] = np.diagonal(A)
    for k, (i, j) in enumerate(pairs):
        targets[n + k] = A[i, j]

    eq_matrix = np.zeros((n, num_vars))
    eq_rhs = np.zeros(n)
    for i in range(n):
        eq_matrix[i, i] = 1.0
    for k, (i, j) in enumerate(pairs):
        eq_matrix[i, n + k] = 1.0

    # t_p + L_p >= a_p and t_p - L_p >= -a_p linearize t_p >= |a_p - L_p|.
    ge_matrix = np.zeros((2 * num_entry, num_vars))
    ge_rhs = np.zeros(2 * num_entry)
    for p in range(num_entry):
        ge_matrix[2 * p, p] = 1.0
        ge_matrix[2 * p, num_entry + p] = 1.0
        ge_rhs[2 * p] = targets[p]
        ge_matrix[2 * p + 1, p] = -1.0
        ge_matrix[2 * p + 1, num_entry + p] = 1.0
        ge_rhs[2 * p + 1] = -targets[p]

    objective = np.zeros(num_vars)
    objective[num_entry:] = 1.0

    forbidden = np.ones((n, n), dtype=bool)
    np.fill_diagonal(forbidden, False)
    rows, cols = edges.index_arrays()
    forbidden[rows, cols] = False
    constant = float(np.abs(A[forbidden]).sum())

    return LpProblem(
        num_vars=num_vars,
        objective_coeffs=objective,
        eq_matrix=eq_matrix,
        eq_rhs=eq_rhs,
        ge_matrix=ge_matrix,
        ge_rhs=ge_rhs,
        lower_bounds=lower,
        upper_bounds=upper,
        objective_constant=constant,
    )


def laplacian_from_solution(variable_values, edges: EdgeSet) -> np.ndarray:
    """Assemble the Laplacian encoded by a nearness-LP solution vector."""
    values = np.asarray(variable_values, dtype=np.float64)
    n = edges.n
    pairs = edges.sorted_pairs()
    if values.size < n + len(pairs):
        raise ValueError("solution vector is shorter than the entry variables")
    L = np.zeros((n, n))
    np.fill_diagonal(L, values[:n])
    for k, (i, j) in enumerate(pairs):
        L[i, j] = values[n + k]
    return L


def oracle_optimum(A, edges: EdgeSet, max_iters: int = DEFAULT_MAX_ITERS) -> float:
    """LP optimum of the nearness problem (independent of the fast path).

    The LP is always feasible (the zero matrix satisfies every
    constraint) and bounded below by zero, so any non-optimal outcome is
    a solver failure and raises :class:`NumericalError`.
    """
    solution = simplex_solve(build_nearness_lp(A, edges), max_iters=max_iters)
    if solution.status != OPTIMAL:
        raise NumericalError(
            f"simplex returned {solution.status} after {solution.iterations} pivots"
        )
    return solution.objective_value
