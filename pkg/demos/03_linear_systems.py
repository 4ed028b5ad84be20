"""
Linear systems through {1}-inverses
===================================

A*x = c is consistent exactly when the transformed right side
c' = Q*c has zeros below the first a entries.  The solutions then form
an affine set: one particular solution plus the span of the last
n - a columns of P (the directrix).
"""

from ginv import (ExactMatrix, InconsistentSystemError, solve_left,
                  solve_right)

A = ExactMatrix([
    [1, 2, 1],
    [0, 1, 0],
    [1, 1, 1],
])
c = ExactMatrix([[-3], [-1], [-2]])

sol = solve_right(A, c)
print("dimension of the solution set:", sol.dimension)
print("particular solution:")
for line in sol.particular.render_lines():
    print(" ", line)
print("directrix (columns span the homogeneous solutions):")
for line in sol.directrix.render_lines():
    print(" ", line)

# Sweep the set: every parameter vector t gives a solution.
for t in ([[0]], [[1]], [["-2/3"]]):
    x = sol.member(ExactMatrix(t))
    print("A*x == c at t =", t, ":", A @ x == c)

# Membership is decided exactly.
print("contains its own particular:", sol.contains(sol.particular))

# Row systems x*A = r go through the same machinery, transposed.
r = ExactMatrix([[2, 4, 2]])
left = solve_left(A, r)
print("left system dimension:", left.dimension)

# Inconsistent input raises, carrying the nonzero tail of c'.
bad = ExactMatrix([[1, 1], [1, 1]])
try:
    solve_right(bad, ExactMatrix([[0], [1]]))
except InconsistentSystemError as exc:
    print("inconsistent system rejected:", exc)
