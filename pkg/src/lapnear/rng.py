"""Seeded, counter-based random number generation.

All randomized code in this package draws from :class:`SplitMix64`, a
counter-based generator implemented here so that streams are bitwise
reproducible across runs, platforms, and library versions.  The k-th raw
output (k = 1, 2, ...) is

    out_k = mix64((seed + k * GOLDEN_GAMMA) mod 2**64)

where ``mix64`` is the SplitMix64 finalizer.  Uniform doubles take the top
53 bits (``raw >> 11`` scaled by 2**-53, giving values in [0, 1)), and
standard normals come from the Box-Muller transform: a request for m
normals consumes 2 * ceil(m / 2) uniforms (first half as radii, second
half as angles), so the stream position after any call depends only on
the request sizes, never on the drawn values.
"""

from __future__ import annotations

import numpy as np

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MASK64 = 0xFFFFFFFFFFFFFFFF

MAX_SEED = MASK64


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python integer (mod 2**64)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    # uint64 arithmetic wraps mod 2**64, matching mix64 exactly
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, index: int) -> int:
    """Child seed for stream ``index``, decorrelated from the parent stream.

    Used for per-trial and per-size substreams so that work units can run
    in any order (or concurrently) and still reproduce bit-identical
    results.
    """
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if index < 0:
        raise ValueError(f"stream index must be nonnegative, got {index}")
    base = (seed + (index + 1) * GOLDEN_GAMMA) & MASK64
    return mix64(mix64(base) ^ 0xD1B54A32D192ED03)


class SplitMix64:
    """Deterministic stream of uniforms and normals over a shared counter.

    Scalar and vector draws advance the same counter, so interleaving them
    is well defined: ``uniform(k)`` consumes k counter positions and
    ``uniform1()`` consumes one.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= MAX_SEED:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._seed = seed
        self._count = 0

    @property
    def position(self) -> int:
        """Number of raw outputs consumed so far."""
        return self._count

    def raw(self, size: int) -> np.ndarray:
        """Next ``size`` raw 64-bit outputs as a uint64 array."""
        if size < 0:
            raise ValueError("size must be nonnegative")
        idx = np.arange(self._count + 1, self._count + size + 1, dtype=np.uint64)
        self._count += size
        return _mix64_array(idx * np.uint64(GOLDEN_GAMMA) + np.uint64(self._seed))

    def raw1(self) -> int:
        """Next raw output on the scalar (pure Python) path."""
        self._count += 1
        return mix64(self._seed + self._count * GOLDEN_GAMMA)

    def uniform(self, size: int) -> np.ndarray:
        """``size`` doubles, i.i.d. uniform on [0, 1)."""
        return (self.raw(size) >> np.uint64(11)) * np.float64(2.0**-53)

    def uniform1(self) -> float:
        """One uniform double on [0, 1); bit-identical to the vector path."""
        return (self.raw1() >> 11) * 2.0**-53

    def integer_below(self, n: int) -> int:
        """Uniform integer in [0, n); modulo bias is ~n/2**64, negligible."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.raw1() % n

    def normal(self, size: int) -> np.ndarray:
        """``size`` standard normal doubles via Box-Muller.

        Consumes 2 * ceil(size / 2) uniforms: the first half become radii
        sqrt(-2 log(1 - u)), the second half angles 2*pi*u; the output is
        the radius*cos block followed by the radius*sin block, truncated
        to ``size``.
        """
        if size < 0:
            raise ValueError("size must be nonnegative")
        pairs = (size + 1) // 2
        u = self.uniform(2 * pairs)
        radius = np.sqrt(-2.0 * np.log1p(-u[:pairs]))
        angle = (2.0 * np.pi) * u[pairs:]
        out = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
        return out[:size]
