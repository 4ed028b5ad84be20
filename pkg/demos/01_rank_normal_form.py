"""
Rank normal form: regular Q, P with Q*A*P = E_a
===============================================

Every matrix A of rank a factors through the block matrix E_a that
carries I_a in its top-left corner and zeros elsewhere.  The pair
(Q, P) is produced by exact Gauss-Jordan elimination, so the identity
below holds to equality, not to a tolerance.
"""

from ginv import ExactMatrix, inverse_regular, rank, rank_normal_form

A = ExactMatrix([
    [1, 2, 1],
    [0, 1, 0],
    [1, 1, 1],
])

rnf = rank_normal_form(A)
print("A =")
for line in A.render_lines():
    print(" ", line)
print("rank from the factorization:", rnf.rank, " rank(A):", rank(A))

print("Q =")
for line in rnf.q.render_lines():
    print(" ", line)
print("P =")
for line in rnf.p.render_lines():
    print(" ", line)

# The defining identity, checked exactly.
E = ExactMatrix.e_block(A.rows, A.cols, rnf.rank)
print("Q*A*P == E_a:", rnf.q @ A @ rnf.p == E)

# Q and P are regular, so A = Q^-1 * E_a * P^-1.
recovered = inverse_regular(rnf.q) @ E @ inverse_regular(rnf.p)
print("Q^-1 * E_a * P^-1 == A:", recovered == A)

# A rank-deficient rectangular example.
B = ExactMatrix([
    [1, 1],
    [1, 1],
    [2, 2],
])
rnf_b = rank_normal_form(B)
print("rank(B) =", rnf_b.rank)
print("Q*B*P == E_1:",
      rnf_b.q @ B @ rnf_b.p == ExactMatrix.e_block(3, 2, 1))
