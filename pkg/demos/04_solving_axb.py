"""
The matrix equation A*X*B = C
=============================

Consistency has a closed test: A*A1*C*B1*B = C for any {1}-inverses
A1, B1.  When it holds, the full solution set is the image of the
affine map g(Y) = X0 + Y - L*Y*R with X0 = A1*C*B1, L = A1*A and
R = B*B1: every g(Y) solves the equation, and every solution X is
g(X - X0), so nothing is left out.
"""

from ginv import (ExactMatrix, consistency_check, family_from,
                  penrose_general_solution)

A = ExactMatrix([
    [1, 2, 1],
    [0, 1, 0],
    [1, 1, 1],
])
B = ExactMatrix([
    [1, 1],
    [1, 1],
    [2, 2],
])
C = ExactMatrix([
    [-3, -3],
    [-1, -1],
    [-2, -2],
])

print("consistent:", consistency_check(A, B, C))

gs = penrose_general_solution(A, B, C)
print("X0 = A1*C*B1 =")
for line in gs.X0.render_lines():
    print(" ", line)

# Apply the map to a few probes; each output solves the equation.
Y1 = ExactMatrix.zeros(3, 3)
Y2 = ExactMatrix([[1, 0, 2], [0, "1/3", 0], [-1, 4, "i"]])
for Y in (Y1, Y2):
    X = gs.apply(Y)
    print("A*g(Y)*B == C:", A @ X @ B == C)

# Every solution is reached: g(X - X0) = X reproduces the input.
X = gs.apply(Y2)
print("g(X - X0) == X:", gs.apply(X - gs.X0) == X)

# The verdict does not depend on which {1}-inverses are chosen.
A1 = family_from(A).instantiate(ExactMatrix([[1], [0]]),
                                ExactMatrix([[2, -1]]),
                                ExactMatrix([[5]]))
B1 = family_from(B).canonical()
print("consistent with other inverses:",
      consistency_check(A, B, C, A1=A1, B1=B1))
