"""Certify the fast construction against an independent LP solve.

The nearness problem is a linear program, so at small sizes we can solve
it with a generic simplex method and compare objective values.  The fast
O(n^2) construction must land on the same optimum every time.
"""

import numpy as np

from lapnear import EdgeSet, nearest_laplacian, oracle_optimum
from lapnear.rng import SplitMix64

rng = SplitMix64(8)


def random_instance(n, density, scale=2.0):
    A = scale * rng.normal(n * n).reshape(n, n)
    pairs = {(i, j) for i in range(n) for j in range(n)
             if i != j and rng.uniform1() < density}
    return A, EdgeSet(n, frozenset(pairs))


print(f"{'n':>3} {'density':>8} {'construction':>14} {'LP optimum':>12} {'gap':>10}")
for n, density in [(3, 1.0), (5, 0.5), (8, 0.3), (10, 0.6), (12, 0.2)]:
    A, edges = random_instance(n, density)
    fast = nearest_laplacian(A, edges).objective
    reference = oracle_optimum(A, edges)
    print(f"{n:>3} {density:>8.1f} {fast:>14.8f} {reference:>12.8f} "
          f"{abs(fast - reference):>10.2e}")

# The optimum is rarely unique: whenever some alpha_i is nonzero, the row
# can be repaired through the diagonal (what the construction does) or
# through any allowed off-diagonal entry, at identical cost.
A, edges = random_instance(6, 0.8)
result = nearest_laplacian(A, edges)
row = int(np.argmax(np.abs(result.alpha)))
print("\nrow", row, "has leftover", round(result.alpha[row], 6),
      "-> infinitely many global optima exist whenever any leftover is nonzero")
