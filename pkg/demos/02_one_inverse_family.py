"""
The complete family of {1}-inverses
===================================

A {1}-inverse of A is any G with A*G*A = A.  Starting from the rank
normal form Q*A*P = E_a, every such G is P*[[I_a, U], [V, W]]*Q for
free blocks U, V, W, which gives the family exactly m*n - a^2 degrees
of freedom.  Nothing is missed: the family is onto the set A{1}.
"""

from ginv import ExactMatrix, family_from, is_one_inverse

A = ExactMatrix([
    [1, 2, 1],
    [0, 1, 0],
    [1, 1, 1],
])

fam = family_from(A)
print("rank =", fam.a, " free parameters =", fam.param_count)
print("block shapes: U", fam.u_shape, " V", fam.v_shape, " W", fam.w_shape)

# The canonical member takes U = V = W = 0.
G = fam.canonical()
print("canonical G =")
for line in G.render_lines():
    print(" ", line)
print("A*G*A == A:", is_one_inverse(A, G))

# Any block choice works; here U, V, W are filled with small numbers.
G2 = fam.instantiate(ExactMatrix([[2], [-1]]),
                     ExactMatrix([["1/2", 3]]),
                     ExactMatrix([["-1+i"]]))
print("another member:", is_one_inverse(A, G2))

# The symbolic form shows the whole family at once.
sym = fam.symbolic()
print("symbolic family, parameters", [str(v) for v in sym.params])
for line in sym.matrix.render_lines():
    print(" ", line)

# Recover where a given member sits inside the family.
blocks = fam.blocks_of(G2)
print("blocks_of returns the original U:", blocks[0] == ExactMatrix([[2], [-1]]))
