"""Timing harness for the O(n^2) nearest-Laplacian construction.

Each size gets one synthetic instance (mean degree 10, rewiring 0.3,
noise scale 5); the construction alone is then timed ``repeats`` times.
Generation and I/O stay outside the timed region, measurements run
strictly sequentially, and records stream out one by one so partial
results survive a failure at a larger size.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from statistics import median
from typing import Iterator

from .matrices import MAX_DENSE_N
from .projection import nearest_laplacian
from .rng import derive_seed
from .synth import SynthParams, generate_instance

BENCH_MEAN_DEGREE = 10
BENCH_REWIRE_PROB = 0.3
BENCH_NOISE_SCALE = 5.0


@dataclass(frozen=True)
class BenchRecord:
    n: int
    repeats: int
    median_seconds: float
    min_seconds: float


def bench_projection(sizes, repeats: int, seed: int) -> Iterator[BenchRecord]:
    """One timing record per size, smallest first, as a lazy iterator.

    Arguments are validated eagerly; a size whose instance cannot be
    allocated is reported on stderr and skipped, and later sizes still
    run.
    """
    sizes = [int(n) for n in sizes]
    if not sizes:
        raise ValueError("need at least one size")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes must be strictly ascending, got {sizes}")
    if repeats < 3:
        raise ValueError(f"need repeats >= 3 for a stable median, got {repeats}")
    if sizes[0] <= BENCH_MEAN_DEGREE:
        raise ValueError(f"sizes must exceed the mean degree {BENCH_MEAN_DEGREE}")
    if sizes[-1] > MAX_DENSE_N:
        raise ValueError(f"sizes beyond the dense cap {MAX_DENSE_N} cannot run")
    return _run_bench(sizes, repeats, seed)


def _run_bench(sizes, repeats: int, seed: int) -> Iterator[BenchRecord]:
    for index, n in enumerate(sizes):
        params = SynthParams(
            n=n,
            k=BENCH_MEAN_DEGREE,
            beta=BENCH_REWIRE_PROB,
            s=BENCH_NOISE_SCALE,
            seed=derive_seed(seed, index),
        )
        try:
            instance = generate_instance(params)
            A, edges = instance.observed, instance.edges
            del instance  # drop the true Laplacian before timing

            times = []
            for _ in range(repeats):
                start = time.perf_counter()
                nearest_laplacian(A, edges)
                times.append(time.perf_counter() - start)
        except MemoryError:
            print(f"bench: skipping n={n}: out of memory", file=sys.stderr)
            continue
        yield BenchRecord(
            n=n,
            repeats=repeats,
            median_seconds=float(median(times)),
            min_seconds=float(min(times)),
        )
