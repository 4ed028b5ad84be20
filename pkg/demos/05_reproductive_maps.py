"""
Reproductive and non-reproductive solution maps
===============================================

A general-solution map g is reproductive when g(g(Y)) = g(Y) for all
Y; equivalently, when its anchor satisfies X0 = L*X0*R.  Reproductive
maps fix every solution, so they also act as solution recognizers.
The difference g(g(Y)) - g(Y) is constant in Y either way: it always
equals X0 - L*X0*R.
"""

from ginv import (CASES, ExactMatrix, case_equation, family_from,
                  haveric_solution, penrose_general_solution,
                  presic_solution, shifted_general_solution)

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
X1 = ExactMatrix([
    [-7, 1, 1],
    [-1, 0, 0],
    [0, 1, 1],
])

penrose = penrose_general_solution(A, B, C)
print("anchor X0 = A1*C*B1 -> reproductive:", penrose.is_reproductive())

# Anchoring the same map at the solution X1 loses reproductivity.
shifted = shifted_general_solution(A, B, C, X1)
print("anchor X1            -> reproductive:", shifted.is_reproductive())

# The idempotence defect is the constant X0 - L*X0*R.
defect = shifted.X0 - shifted.L @ shifted.X0 @ shifted.R
Y = ExactMatrix([[0, 1, 0], [2, 0, "1/2"], [0, 0, 3]])
gY = shifted.apply(Y)
print("g(g(Y)) - g(Y) == X0 - L*X0*R:", shifted.apply(gY) - gY == defect)

# The five classical special cases, each in a non-reproductive
# (historical) and a reproductive form built from one {1}-inverse.
S = ExactMatrix([[1, 1], [0, 0]])
B1 = family_from(S).canonical()
for case in CASES:
    Aeq, Beq, Ceq = case_equation(S, case)
    hist = presic_solution(S, B1, case)
    repro = haveric_solution(S, B1, case)
    out = hist.apply(ExactMatrix([[1, 2], [3, 4]]))
    print(f"{case:6s} historical solves: {Aeq @ out @ Beq == Ceq}   "
          f"reproductive map: {repro.is_reproductive()}   "
          f"fixes the output: {repro.apply(out) == out}")
