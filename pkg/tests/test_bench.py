"""Timing harness plumbing (scaling itself is covered by the acceptance suite)."""

import pytest

from lapnear import bench_projection


class TestBenchProjection:
    def test_smoke_single_size(self):
        records = list(bench_projection([100], repeats=3, seed=1))
        assert len(records) == 1
        rec = records[0]
        assert rec.n == 100 and rec.repeats == 3
        assert 0.0 < rec.min_seconds <= rec.median_seconds

    def test_multiple_sizes_in_order(self):
        records = list(bench_projection([60, 90], repeats=3, seed=2))
        assert [r.n for r in records] == [60, 90]

    def test_validation_is_eager(self):
        with pytest.raises(ValueError):
            bench_projection([], repeats=3, seed=1)
        with pytest.raises(ValueError):
            bench_projection([200, 100], repeats=3, seed=1)
        with pytest.raises(ValueError):
            bench_projection([100], repeats=2, seed=1)
        with pytest.raises(ValueError):
            bench_projection([10], repeats=3, seed=1)  # must exceed mean degree
        with pytest.raises(ValueError):
            bench_projection([100, 20000], repeats=3, seed=1)  # dense cap
