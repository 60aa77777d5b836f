"""Nearest graph Laplacian construction and its supporting toolkit.

Core entry points:

* :func:`nearest_laplacian` — nearest Laplacian in the entrywise 1-norm
  for a known edge structure, O(n^2).
* :func:`oracle_optimum` — independent LP certification at small sizes.
* :func:`generate_instance` / :func:`watts_strogatz` — seeded synthetic
  networks and noisy observations.
* :func:`eigenvalues` / :func:`ave_var` — spectral closeness diagnostics.
"""

from .bench import BenchRecord, bench_projection
from .errors import DimensionError, FormatError, NumericalError
from .l2rows import RowSolution, complete_graph_l2_row, zero_sum_projection
from .lp_oracle import (
    LpProblem,
    LpSolution,
    build_nearness_lp,
    laplacian_from_solution,
    oracle_optimum,
    simplex_solve,
)
from .matrices import (
    EdgeSet,
    LaplacianCheckReport,
    read_edges,
    read_matrix_csv,
    validate_laplacian,
    write_edges,
    write_matrix_csv,
)
from .projection import (
    ProjectionResult,
    l1_distance,
    nearest_laplacian,
    project_sign_structure,
)
from .rng import SplitMix64, derive_seed
from .spectra import AveVarReport, SpectralSummary, ave_var, eigenvalues
from .synth import SynthInstance, SynthParams, generate_instance, watts_strogatz

__version__ = "0.1.0"

__all__ = [
    "AveVarReport",
    "BenchRecord",
    "DimensionError",
    "EdgeSet",
    "FormatError",
    "LaplacianCheckReport",
    "LpProblem",
    "LpSolution",
    "NumericalError",
    "ProjectionResult",
    "RowSolution",
    "SpectralSummary",
    "SplitMix64",
    "SynthInstance",
    "SynthParams",
    "ave_var",
    "bench_projection",
    "build_nearness_lp",
    "complete_graph_l2_row",
    "derive_seed",
    "eigenvalues",
    "generate_instance",
    "l1_distance",
    "laplacian_from_solution",
    "nearest_laplacian",
    "oracle_optimum",
    "project_sign_structure",
    "read_edges",
    "read_matrix_csv",
    "simplex_solve",
    "validate_laplacian",
    "watts_strogatz",
    "write_edges",
    "write_matrix_csv",
    "zero_sum_projection",
]
