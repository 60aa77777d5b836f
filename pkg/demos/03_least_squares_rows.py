"""Why the squared 2-norm variant has no equally simple construction.

For the 1-norm, clipping and a diagonal fix solve the whole problem.  For
the squared 2-norm, even the easiest setting (complete graph, matrix
already sign-feasible) only yields a closed form row by row, and only
when the row sum is nonnegative.
"""

import numpy as np

from lapnear import complete_graph_l2_row, zero_sum_projection

# Projection onto the zero-sum hyperplane: subtract the mean.
a = np.array([1.0, 2.0, 3.0])
print("zero-sum projection of", a, "->", zero_sum_projection(a))

# Row with nonnegative sum: mean subtraction keeps the sign pattern.
row = np.array([6.0, -2.0, -1.0])  # diagonal first, sum = +3
out = complete_graph_l2_row(row, 0)
print("\nrow", row, "sum", row.sum())
print("least-squares zero-sum row:", out.values, "| applicable:", out.applicable)

# Row with negative sum: the mean shift would push off-diagonal entries
# positive, so the closed form simply does not apply.
row = np.array([1.0, -2.0, -3.0])  # sum = -4
out = complete_graph_l2_row(row, 0)
print("\nrow", row, "sum", row.sum())
print("applicable:", out.applicable, "| values:", out.values)
print("-> a negative row sum needs an active-set solve, not a formula;")
print("   this asymmetry is exactly why the 1-norm objective is preferred")
