"""Exact-arithmetic {1}-inverses and the matrix equation A*X*B = C.

Everything computes over rational complex numbers, so every equality in
the API is exact.  The core objects are the rank normal form
Q*A*P = E_a, the complete parametric family of {1}-inverses built from
it, the general solution map g(Y) = X0 + Y - L*Y*R with its
reproductivity test, constructive solutions of one-sided linear systems,
the Kronecker-product reduction, and a probe that decides (when it can)
whether a particular solution is of the form G_A*C*G_B.
"""

from .axb import (CASES, GeneralSolutionMap, case_equation, consistency_check,
                  haveric_solution, penrose_general_solution, presic_solution,
                  shifted_general_solution, solution_dimension)
from .errors import (ContractError, DocumentParseError, GinvError,
                     InconsistentEquationError, InconsistentSystemError,
                     ScalarParseError, ShapeError, SingularMatrixError,
                     UnboundVariableError)
from .kron import VecIndexMap, kronecker, mat, solve_axb_via_kron, vec
from .linsys import (AffineSolution, SolveTrace, general_inverse_solution,
                     solve_left, solve_right, sweep_block)
from .matrix import (ExactMatrix, RankNormalForm, inverse_regular, rank,
                     rank_normal_form)
from .mxfile import MatrixDocument, load_document, parse_document
from .oneinv import (OneInverseFamily, SymbolicOneInverse, family_from,
                     instantiate, is_one_inverse, symbolic_family)
from .poly import (Poly, SymMatrix, Variable, affine_decompose,
                   fresh_variables, sym_matmul)
from .represent import (DEFAULT_BUDGET, DEFAULT_SEED, ProvenInfeasible,
                        Unknown, Witness, eliminate_affine,
                        replay_infeasibility, representability_probe,
                        symbolic_product)
from .scalar import GaussianRational, as_scalar, parse_scalar, render_scalar

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "as_scalar", "parse_scalar", "render_scalar",
    "ExactMatrix", "RankNormalForm", "rank_normal_form", "rank",
    "inverse_regular",
    "Variable", "Poly", "SymMatrix", "fresh_variables", "sym_matmul",
    "affine_decompose",
    "OneInverseFamily", "SymbolicOneInverse", "family_from", "instantiate",
    "is_one_inverse", "symbolic_family",
    "GeneralSolutionMap", "CASES", "case_equation", "consistency_check",
    "penrose_general_solution", "shifted_general_solution", "presic_solution",
    "haveric_solution", "solution_dimension",
    "AffineSolution", "SolveTrace", "solve_right", "solve_left",
    "general_inverse_solution", "sweep_block",
    "VecIndexMap", "kronecker", "vec", "mat", "solve_axb_via_kron",
    "Witness", "ProvenInfeasible", "Unknown", "symbolic_product",
    "representability_probe", "eliminate_affine", "replay_infeasibility",
    "DEFAULT_SEED", "DEFAULT_BUDGET",
    "MatrixDocument", "parse_document", "load_document",
    "GinvError", "ShapeError", "ScalarParseError", "DocumentParseError",
    "SingularMatrixError", "InconsistentSystemError",
    "InconsistentEquationError", "ContractError", "UnboundVariableError",
]
