"""Quadratic scaling of the construction, measured on this machine.

Every entry is touched a constant number of times, so doubling n should
roughly quadruple the time.  Generation is excluded from the timed
region.  (The LP certificate route is exponentially more expensive and
capped at n=30; that contrast is the whole reason the fast path exists.)
"""

from lapnear import bench_projection

print(f"{'n':>6} {'median':>12} {'min':>12} {'t(n)/t(n/2)':>12}")
previous = None
for record in bench_projection([250, 500, 1000, 2000, 4000], repeats=5, seed=1):
    ratio = "" if previous is None else f"{record.median_seconds / previous:11.2f}x"
    print(f"{record.n:>6} {record.median_seconds:>11.4f}s {record.min_seconds:>11.4f}s {ratio:>12}")
    previous = record.median_seconds
