"""Eigenvalue diagnostics for recovered Laplacians.

A valid graph Laplacian annihilates the all-ones vector, so it always has
an eigenvalue at zero, and every other eigenvalue has nonnegative real
part.  The eigenvalue with the second smallest real part governs how fast
the associated averaging dynamics contract, which makes the gap
``|Re(lambda_2) truth - reconstruction|`` the natural closeness statistic
for noisy recovery experiments.

Eigenvalues come from LAPACK's dense nonsymmetric solver (balancing,
Hessenberg reduction, shifted QR), which matches the accuracy contract
needed here; failures to converge surface as :class:`NumericalError`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import DimensionError, NumericalError
from .matrices import as_square_matrix
from .projection import nearest_laplacian
from .rng import derive_seed
from .synth import SynthParams, generate_instance

EIG_MAX_N = 2000


@dataclass(frozen=True)
class SpectralSummary:
    """All eigenvalues sorted by (real, imaginary) part, plus Re(lambda_2)."""

    eigenvalues: np.ndarray
    lambda2_real: float


@dataclass(frozen=True)
class AveVarReport:
    """Mean and population variance of |Re(lambda_2*) - Re(lambda_2)|
    over ``trials`` independently generated instances at noise scale ``s``."""

    s: float
    trials: int
    ave: float
    var: float


def eigenvalues(M) -> SpectralSummary:
    """Full spectrum of a real square matrix, deterministically ordered."""
    M = as_square_matrix(M)
    n = M.shape[0]
    if n < 2:
        raise DimensionError("need n >= 2 for a second-smallest eigenvalue")
    if n > EIG_MAX_N:
        raise DimensionError(f"dense eigensolver capped at n={EIG_MAX_N}, got {n}")
    try:
        values = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue iteration failed to converge: {exc}") from exc
    order = np.lexsort((values.imag, values.real))
    values = np.ascontiguousarray(values[order])
    return SpectralSummary(eigenvalues=values, lambda2_real=float(values[1].real))


def _lambda2_gap(params: SynthParams) -> float:
    instance = generate_instance(params)
    truth = eigenvalues(instance.true_laplacian).lambda2_real
    recovered = eigenvalues(
        nearest_laplacian(instance.observed, instance.edges).L
    ).lambda2_real
    return abs(truth - recovered)


def ave_var(
    s: float,
    n: int,
    k: int,
    beta: float,
    trials: int,
    seed: int,
    workers: int = 1,
) -> AveVarReport:
    """Noise-sensitivity statistics of Re(lambda_2) recovery.

    Each trial generates a fresh instance from ``derive_seed(seed, trial)``,
    recovers the Laplacian from the noisy observation, and records
    |Re(lambda_2) truth - reconstruction|.  ``ave`` is the mean and
    ``var`` the population variance (divide by the trial count), both
    accumulated in trial order, so the report is identical at any level
    of parallelism.  BLAS pools are pinned to one thread per solve to
    keep eigenvalues bitwise stable; ``workers`` trials run concurrently.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if workers < 1:
        raise ValueError(f"need workers >= 1, got {workers}")
    param_list = [
        SynthParams(n=n, k=k, beta=beta, s=s, seed=derive_seed(seed, trial))
        for trial in range(trials)
    ]
    with threadpool_limits(limits=1):
        if workers == 1:
            gaps = [_lambda2_gap(p) for p in param_list]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                gaps = list(pool.map(_lambda2_gap, param_list))
    ave = sum(gaps) / trials
    var = sum((g - ave) ** 2 for g in gaps) / trials
    return AveVarReport(s=s, trials=trials, ave=ave, var=var)
