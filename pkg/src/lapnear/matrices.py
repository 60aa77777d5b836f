"""Dense square matrices, edge structures, validation, and file formats.

Matrices are plain float64 numpy arrays, C-ordered and square.  The edge
structure of a directed graph is an :class:`EdgeSet`.  Both have a
canonical text format:

* Matrix CSV: one row per line, comma-separated decimal or scientific
  tokens, no header.  Values are written with 17 significant digits so a
  write/read round trip is bit-exact.
* Edge file: a header line ``n <N>``, then one ``i j`` pair per line
  (0-based, whitespace-separated).  Lines starting with ``#`` are
  comments.  Duplicate pairs collapse; self-loops and out-of-range
  indices are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionError, FormatError

# Dense allocation cap: one float64 matrix at the cap is ~2 GB.  Everything
# here is O(n^2) dense storage, so larger inputs are refused outright.
MAX_DENSE_N = 16384

# Row-block size for streaming passes over large matrices.  Fixed so that
# blockwise reductions are deterministic across runs.
ROW_BLOCK = 512

DEFAULT_TOL_REL = 1e-9
DEFAULT_TOL_ABS = 1e-12


def as_square_matrix(a, what: str = "matrix") -> np.ndarray:
    """Validate and return ``a`` as a square, finite, C-ordered float64 array."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 1:
        raise DimensionError(f"{what} must be at least 1x1")
    if n > MAX_DENSE_N:
        raise DimensionError(f"{what} size {n} exceeds dense cap {MAX_DENSE_N}")
    for start in range(0, n, ROW_BLOCK):
        if not np.isfinite(arr[start : start + ROW_BLOCK]).all():
            raise ValueError(f"{what} contains NaN or Inf entries")
    return np.ascontiguousarray(arr)


@dataclass(frozen=True)
class EdgeSet:
    """Directed edge structure over ``n`` nodes, 0-based, no self-loops."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 2:
            raise DimensionError(f"edge structure needs n >= 2, got {self.n}")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop ({i}, {i}) is not allowed")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, n: int) -> "EdgeSet":
        """All ordered pairs (i, j), i != j."""
        return cls(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))

    def __contains__(self, pair) -> bool:
        return pair in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_pairs(self) -> list:
        """Edges in row-major (i, then j) order."""
        return sorted(self.edges)

    def index_arrays(self):
        """Row and column index arrays in row-major edge order (cached)."""
        cached = getattr(self, "_index_arrays", None)
        if cached is None:
            if self.edges:
                pairs = np.array(list(self.edges), dtype=np.intp)
                order = np.lexsort((pairs[:, 1], pairs[:, 0]))
                cached = (
                    np.ascontiguousarray(pairs[order, 0]),
                    np.ascontiguousarray(pairs[order, 1]),
                )
            else:
                cached = (np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp))
            object.__setattr__(self, "_index_arrays", cached)
        return cached

    def row_columns(self) -> list:
        """For each row i, the sorted array of allowed off-diagonal columns."""
        cols = [[] for _ in range(self.n)]
        for i, j in self.edges:
            cols[i].append(j)
        return [np.array(sorted(c), dtype=np.intp) for c in cols]


@dataclass(frozen=True)
class LaplacianCheckReport:
    """Residuals of the three graph-Laplacian properties plus the verdict.

    ``row_sum_residual``: max over rows of the absolute row sum.
    ``sign_violation``: largest magnitude of a negative diagonal or a
    positive off-diagonal entry.
    ``structure_violation``: largest magnitude of an off-diagonal entry
    outside the allowed edge set.
    ``is_valid`` holds when every residual is at most
    ``tol_abs + tol_rel * max|entry|``.
    """

    row_sum_residual: float
    sign_violation: float
    structure_violation: float
    is_valid: bool


def validate_laplacian(
    L,
    edges: EdgeSet,
    tol_rel: float = DEFAULT_TOL_REL,
    tol_abs: float = DEFAULT_TOL_ABS,
) -> LaplacianCheckReport:
    """Check zero row sums, the sign pattern, and the support of ``L``."""
    L = as_square_matrix(L, "laplacian")
    n = L.shape[0]
    if edges.n != n:
        raise DimensionError(f"matrix is {n}x{n} but edge structure has n={edges.n}")
    row_cols = edges.row_columns()

    max_abs = 0.0
    row_sum_residual = 0.0
    neg_diag = 0.0
    pos_offdiag = 0.0
    structure_violation = 0.0
    for start in range(0, n, ROW_BLOCK):
        stop = min(start + ROW_BLOCK, n)
        block = L[start:stop]
        idx = np.arange(start, stop)
        diag = block[idx - start, idx]

        max_abs = max(max_abs, float(np.abs(block).max()))
        row_sum_residual = max(row_sum_residual, float(np.abs(block.sum(axis=1)).max()))
        neg_diag = max(neg_diag, float(max(0.0, -diag.min())))

        tmp = block.copy()
        tmp[idx - start, idx] = -np.inf
        pos_offdiag = max(pos_offdiag, float(max(0.0, tmp.max())))

        tmp = np.abs(block)
        tmp[idx - start, idx] = 0.0
        for local, i in enumerate(range(start, stop)):
            tmp[local, row_cols[i]] = 0.0
        structure_violation = max(structure_violation, float(tmp.max()))

    sign_violation = max(neg_diag, pos_offdiag)
    threshold = tol_abs + tol_rel * max_abs
    is_valid = (
        row_sum_residual <= threshold
        and sign_violation <= threshold
        and structure_violation <= threshold
    )
    return LaplacianCheckReport(
        row_sum_residual=row_sum_residual,
        sign_violation=sign_violation,
        structure_violation=structure_violation,
        is_valid=is_valid,
    )


def _parse_float(token: str, lineno: int, path) -> float:
    try:
        value = float(token)
    except ValueError:
        raise FormatError(f"{path}: line {lineno}: non-numeric token {token!r}") from None
    if not math.isfinite(value):
        raise FormatError(f"{path}: line {lineno}: non-finite value {token!r}")
    return value


def read_matrix_csv(path) -> np.ndarray:
    """Read a square matrix from CSV; errors carry line numbers."""
    rows = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            tokens = line.split(",")
            if width is None:
                width = len(tokens)
            elif len(tokens) != width:
                raise FormatError(
                    f"{path}: line {lineno}: expected {width} columns, got {len(tokens)}"
                )
            rows.append([_parse_float(t.strip(), lineno, path) for t in tokens])
    if not rows:
        raise FormatError(f"{path}: empty matrix file")
    if len(rows) != width:
        raise FormatError(f"{path}: matrix is {len(rows)}x{width}, expected square")
    return as_square_matrix(np.array(rows, dtype=np.float64), "matrix")


def write_matrix_csv(M, path) -> None:
    """Write a matrix as CSV with 17 significant digits (bit-exact round trip)."""
    M = as_square_matrix(M, "matrix")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for row in M:
            fh.write(",".join(format(x, ".17g") for x in row))
            fh.write("\n")


def read_edges(path) -> EdgeSet:
    """Read an edge file (``n <N>`` header, one ``i j`` pair per line)."""
    n = None
    edges = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if n is None:
                if len(tokens) != 2 or tokens[0] != "n":
                    raise FormatError(f"{path}: line {lineno}: expected header 'n <N>'")
                try:
                    n = int(tokens[1])
                except ValueError:
                    raise FormatError(
                        f"{path}: line {lineno}: bad node count {tokens[1]!r}"
                    ) from None
                if n < 2:
                    raise FormatError(f"{path}: line {lineno}: need n >= 2, got {n}")
                continue
            if len(tokens) != 2:
                raise FormatError(f"{path}: line {lineno}: expected 'i j' pair")
            try:
                i, j = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise FormatError(f"{path}: line {lineno}: non-integer node index") from None
            if i == j:
                raise FormatError(f"{path}: line {lineno}: self-loop ({i}, {j})")
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(
                    f"{path}: line {lineno}: edge ({i}, {j}) out of range for n={n}"
                )
            edges.add((i, j))
    if n is None:
        raise FormatError(f"{path}: empty edge file (missing 'n <N>' header)")
    return EdgeSet(n, frozenset(edges))


def write_edges(edges: EdgeSet, path) -> None:
    """Write an edge file in canonical (sorted, deduplicated) form."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"n {edges.n}\n")
        for i, j in edges.sorted_pairs():
            fh.write(f"{i} {j}\n")


def sha256_file(path) -> str:
    """Content digest used in run reports."""
    import hashlib

    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()
