"""
Kronecker vectorization of A*X*B = C
====================================

Row-major flattening turns the matrix equation into an ordinary
linear system: vec(A*X*B) = (A kron B^T) * vec(X).  Solving that
system with the {1}-inverse machinery yields the same solution set,
parametrized by n*p - rank(A)*rank(B) free coordinates.
"""

from ginv import ExactMatrix, kronecker, mat, rank, solve_axb_via_kron, vec

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

K = kronecker(A, B.T)
print("A kron B^T is", K.rows, "x", K.cols, "with rank", rank(K),
      "=", rank(A), "*", rank(B))
for line in K.render_lines():
    print(" ", line)
print("vec(C)^T =", " ".join(vec(C).T.render_lines()))

sol = solve_axb_via_kron(A, B, C)
print("solution-set dimension:", sol.dimension, "= 9 - 2")

# Each member of the affine set folds back into a matrix solution.
t = ExactMatrix([[1], [1], [0], [0], [0], [1], [1]])
X = mat(sol.member(t), 3, 3)
print("X at t = (1,1,0,0,0,1,1):")
for line in X.render_lines():
    print(" ", line)
print("A*X*B == C:", A @ X @ B == C)

# A known solution sits in the set: membership is exact.
X1 = ExactMatrix([[-7, 1, 1], [-1, 0, 0], [0, 1, 1]])
print("vec(X1) in the set:", sol.contains(vec(X1)))

# vec and mat are mutually inverse.
print("mat(vec(X1)) == X1:", mat(vec(X1), 3, 3) == X1)
