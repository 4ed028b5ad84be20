"""
Which solutions have the form G_A * C * G_B?
============================================

Anchors of reproductive maps are exactly the solutions expressible as
G_A*C*G_B over {1}-inverses G_A, G_B.  The probe decides membership:
it searches for a witness assignment over both symbolic families and,
failing that, runs exact affine elimination on the bilinear system.
A contradiction 0 = c with c != 0 is a proof of non-representability
that can be replayed independently.
"""

from ginv import (ExactMatrix, penrose_general_solution, replay_infeasibility,
                  representability_probe, symbolic_product)

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

# X1 solves A*X*B = C but is not any G_A*C*G_B.
X1 = ExactMatrix([
    [-7, 1, 1],
    [-1, 0, 0],
    [0, 1, 1],
])
verdict = representability_probe(A, B, C, X1)
print("verdict for X1:", verdict.kind)
for line in verdict.render_lines():
    print(" ", line)

# The trace replays against the defining equations.
product = symbolic_product(A, B, C)
system = [((i, j), product.entry(i, j) - X1.entry(i, j))
          for i in range(1, 4) for j in range(1, 4)
          if product.entry(i, j) - X1.entry(i, j) != 0]
print("replay confirms the contradiction:",
      replay_infeasibility(verdict, system))

# The canonical anchor, by contrast, is representable by construction.
X0 = penrose_general_solution(A, B, C).X0
witness = representability_probe(A, B, C, X0)
print("verdict for X0:", witness.kind)
for line in witness.render_lines():
    print(" ", line)
print("witness inverses reproduce X0:",
      witness.ga @ C @ witness.gb == X0)
