"""Construct the nearest graph Laplacian to a small identified matrix.

A system-identification step handed us a 2x2 matrix that should have been
a graph Laplacian (zero row sums, nonnegative diagonal, nonpositive
off-diagonal) but is not.  We repair it at minimum total entrywise change.
"""

import numpy as np

from lapnear import EdgeSet, nearest_laplacian, validate_laplacian

A = np.array([[1.0, -2.0],
              [3.0, -4.0]])
edges = EdgeSet.complete(2)

before = validate_laplacian(A, edges)
print("identified matrix:\n", A)
print("row-sum residual:", before.row_sum_residual,
      "| sign violation:", before.sign_violation)

result = nearest_laplacian(A, edges)
print("\nnearest Laplacian:\n", result.L)
print("total 1-norm change:", result.objective)

# The construction is two sweeps.  First, clip every entry to the right
# sign (and zero forbidden positions); what is left over in each row sum
# is alpha.  Second, absorb alpha into the diagonal.  The clipping cost
# plus sum(|alpha|) is provably the minimum possible cost:
print("\nclipping cost:", result.relaxed_objective)
print("row-sum leftovers alpha:", result.alpha)
print("clipping cost + sum|alpha| =",
      result.relaxed_objective + np.abs(result.alpha).sum())

after = validate_laplacian(result.L, edges)
print("\noutput is a valid Laplacian:", after.is_valid)

# A matrix that already is a Laplacian is left untouched:
L_ok = np.array([[2.0, -2.0],
                 [-1.0, 1.0]])
assert np.array_equal(nearest_laplacian(L_ok, edges).L, L_ok)
print("valid inputs are fixed points: OK")
