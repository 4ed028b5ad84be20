"""Representability of a solution X of A*X*B = C as G_A*C*G_B.

Both {1}-inverse families are affine in their own parameters, so each
entry of G_A*C*G_B - X is bilinear: degree at most one per parameter
group.  The probe runs staged affine elimination on those entries; a
contradiction there is a proof of non-representability, success yields a
checked witness assignment, and a surviving nonlinear residual falls
back to alternating sampling (fix one group, solve the other).  The
outcome is sound in both directions but may be Unknown: bilinear
feasibility in general is out of scope.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import ContractError, ShapeError
from .matrix import ExactMatrix
from .oneinv import family_from
from .poly import Poly, SymMatrix
from .scalar import GaussianRational, ZERO, render_scalar

__all__ = ["EliminationStep", "ContradictionStep", "EliminationResult",
           "Witness", "ProvenInfeasible", "Unknown", "DEFAULT_SEED",
           "DEFAULT_BUDGET", "symbolic_product", "eliminate_affine",
           "replay_infeasibility", "representability_probe"]

DEFAULT_SEED = 101
DEFAULT_BUDGET = 40


class EliminationStep:
    """One derived binding: variable = expression, read off the affine
    equation that originated at matrix entry `source`."""

    __slots__ = ("source", "equation", "variable", "expression")

    def __init__(self, source, equation: Poly, variable, expression: Poly):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "equation", equation)
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "expression", expression)

    def __setattr__(self, name, value):
        raise AttributeError("EliminationStep is immutable")

    def render(self) -> str:
        i, j = self.source
        return f"{self.variable} = {self.expression}    [entry ({i},{j})]"


class ContradictionStep:
    """Terminal step: an equation collapsed to the false constant
    statement 0 = constant with constant != 0."""

    __slots__ = ("source", "equation", "constant")

    def __init__(self, source, equation: Poly, constant: GaussianRational):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "equation", equation)
        object.__setattr__(self, "constant", constant)

    def __setattr__(self, name, value):
        raise AttributeError("ContradictionStep is immutable")

    def render(self) -> str:
        i, j = self.source
        return f"0 = {render_scalar(self.constant)}    [entry ({i},{j})]"


class EliminationResult:
    """Fixpoint of staged affine elimination over a polynomial system.

    solved maps variables to fully composed expressions (no solved
    variable appears on any right-hand side); residual holds the
    substituted equations that stayed nonlinear.
    """

    __slots__ = ("solved", "steps", "contradiction", "residual")

    def __init__(self, solved, steps, contradiction, residual):
        object.__setattr__(self, "solved", solved)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "contradiction", contradiction)
        object.__setattr__(self, "residual", residual)

    def __setattr__(self, name, value):
        raise AttributeError("EliminationResult is immutable")

    @property
    def is_contradiction(self) -> bool:
        return self.contradiction is not None

    @property
    def is_fully_solved(self) -> bool:
        return self.contradiction is None and not self.residual


class Witness:
    """A verified representation X = G_A*C*G_B."""

    __slots__ = ("assignment", "ga", "gb")
    kind = "witness"

    def __init__(self, assignment, ga: ExactMatrix, gb: ExactMatrix):
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "ga", ga)
        object.__setattr__(self, "gb", gb)

    def __setattr__(self, name, value):
        raise AttributeError("Witness is immutable")

    def render_lines(self):
        pairs = sorted(self.assignment.items(), key=lambda kv: kv[0].id)
        return [f"{v} = {render_scalar(c)}" for v, c in pairs]


class ProvenInfeasible:
    """A replayable elimination trace ending in 0 = (nonzero constant)."""

    __slots__ = ("steps",)
    kind = "infeasible"

    def __init__(self, steps):
        if not steps or not isinstance(steps[-1], ContradictionStep):
            raise ContractError("infeasibility trace must end in a contradiction")
        object.__setattr__(self, "steps", tuple(steps))

    def __setattr__(self, name, value):
        raise AttributeError("ProvenInfeasible is immutable")

    @property
    def constant(self) -> GaussianRational:
        return self.steps[-1].constant

    def render_lines(self):
        return [s.render() for s in self.steps]


class Unknown:
    """Honest give-up: neither a witness nor a proof within budget."""

    __slots__ = ("reason",)
    kind = "unknown"

    def __init__(self, reason: str):
        object.__setattr__(self, "reason", reason)

    def __setattr__(self, name, value):
        raise AttributeError("Unknown is immutable")

    def render_lines(self):
        return [self.reason]


def _primed(names):
    return [n.replace("_", "'_", 1) for n in names]


def _symbolic_setup(A, B, C, alpha_names=None, beta_names=None):
    fam_a = family_from(A)
    fam_b = family_from(B)
    if beta_names is None:
        beta_names = _primed(fam_b._default_names())
    sym_a = fam_a.symbolic(alpha_names)
    sym_b = fam_b.symbolic(beta_names, id_start=fam_a.param_count)
    product = sym_a.matrix @ SymMatrix.from_exact(C) @ sym_b.matrix
    return sym_a, sym_b, product


def symbolic_product(A: ExactMatrix, B: ExactMatrix, C: ExactMatrix,
                     alpha_names=None, beta_names=None) -> SymMatrix:
    """G_A(alpha) * C * G_B(beta) over the two full symbolic families.

    Entries are bilinear: affine in the alpha group and in the beta
    group separately.
    """
    return _symbolic_setup(A, B, C, alpha_names, beta_names)[2]


def _solve_affine(eq: Poly):
    """Pick the lowest-id variable of an affine equation and solve for it."""
    const, coeffs = eq.linear_form()
    var = min(coeffs, key=lambda v: v.id)
    inv = coeffs[var].inverse()
    expr = Poly.constant(-const * inv)
    for v, c in coeffs.items():
        if v is not var:
            expr = expr - Poly.variable(v).scale(c * inv)
    return var, expr


def eliminate_affine(equations) -> EliminationResult:
    """Staged affine elimination to a fixpoint.

    equations: iterable of (source, Poly) in deterministic order; each
    pass substitutes everything solved so far, reads off new bindings
    from the equations that became affine, and stops at the first
    equation that collapses to a nonzero constant.
    """
    pending = [(pos, eq) for pos, eq in equations]
    solved = {}
    steps = []
    while True:
        progress = False
        residual = []
        for pos, original in pending:
            eq = original.substitute(solved) if solved else original
            if eq.is_zero():
                continue
            if eq.is_constant():
                step = ContradictionStep(pos, original, -eq.constant_value())
                return EliminationResult(dict(solved), tuple(steps + [step]),
                                         step, ())
            if eq.is_affine():
                var, expr = _solve_affine(eq)
                steps.append(EliminationStep(pos, original, var, expr))
                solved = {v: e.substitute({var: expr})
                          for v, e in solved.items()}
                solved[var] = expr
                progress = True
            else:
                residual.append((pos, original))
        pending = residual
        if not progress or not pending:
            break
    residual = tuple((pos, eq.substitute(solved)) for pos, eq in pending)
    return EliminationResult(dict(solved), tuple(steps), None, residual)


def replay_infeasibility(verdict: ProvenInfeasible, equations) -> bool:
    """Re-run a trace against the original system, step by step.

    Checks that every binding re-derives from its source equation under
    the substitutions accumulated so far and that the final equation
    really collapses to the recorded nonzero constant.
    """
    by_source = {}
    for pos, eq in equations:
        by_source.setdefault(pos, []).append(eq)
    solved = {}
    for step in verdict.steps:
        if not any(step.equation == eq for eq in by_source.get(step.source, ())):
            return False
        eq = step.equation.substitute(solved) if solved else step.equation
        if isinstance(step, ContradictionStep):
            return (eq.is_constant() and not eq.is_zero()
                    and -eq.constant_value() == step.constant
                    and not step.constant.is_zero())
        if not eq.is_affine() or eq.is_constant() or eq.is_zero():
            return False
        var, expr = _solve_affine(eq)
        if var != step.variable or expr != step.expression:
            return False
        solved = {v: e.substitute({var: expr}) for v, e in solved.items()}
        solved[var] = expr
    return False


def _assert_bilinear(system, alpha, beta):
    for pos, eq in system:
        if eq.degree_in(alpha) > 1 or eq.degree_in(beta) > 1:
            raise ContractError(
                f"system entry {pos} is not bilinear in the parameter groups")


def _full_assignment(solved, sampled, params):
    """Every parameter pinned: sampled values, then composed bindings
    evaluated with free variables at zero, then zero."""
    base = dict(sampled)
    for v in params:
        if v not in base and v not in solved:
            base[v] = ZERO
    out = dict(base)
    for v, expr in solved.items():
        out[v] = expr.evaluate({**base, **{w: ZERO for w in expr.variables()
                                           if w not in base}})
    return out


def _verify_witness(sym_a, sym_b, C, X, assignment) -> Witness:
    ga = sym_a.instantiate(assignment)
    gb = sym_b.instantiate(assignment)
    if ga @ C @ gb != X:
        raise ContractError("witness failed re-instantiation")
    return Witness(assignment, ga, gb)


def _sample_pool(rng):
    return GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


def representability_probe(A: ExactMatrix, B: ExactMatrix, C: ExactMatrix,
                           X: ExactMatrix, budget: int = DEFAULT_BUDGET,
                           seed: int = DEFAULT_SEED,
                           alpha_names=None, beta_names=None):
    """Decide whether X = G_A*C*G_B for some {1}-inverses G_A, G_B.

    X must solve A*X*B = C.  Returns Witness, ProvenInfeasible or
    Unknown.  Infeasibility only ever comes from exact elimination on
    the full system, never from the sampling phase, so both definite
    verdicts are independently checkable.
    """
    if X.shape != (A.cols, B.rows):
        raise ShapeError("candidate solution", X.shape, (A.cols, B.rows))
    if A @ X @ B != C:
        raise ContractError("X is not a solution of A*X*B = C")
    sym_a, sym_b, product = _symbolic_setup(A, B, C, alpha_names, beta_names)
    alpha, beta = set(sym_a.params), set(sym_b.params)
    params = list(sym_a.params) + list(sym_b.params)
    difference = product - SymMatrix.from_exact(X)
    system = [((i, j), difference.entry(i, j))
              for i in range(1, X.rows + 1) for j in range(1, X.cols + 1)
              if not difference.entry(i, j).is_zero()]
    _assert_bilinear(system, alpha, beta)

    outcome = eliminate_affine(system)
    if outcome.is_contradiction:
        return ProvenInfeasible(outcome.steps)
    if outcome.is_fully_solved:
        assignment = _full_assignment(outcome.solved, {}, params)
        return _verify_witness(sym_a, sym_b, C, X, assignment)

    # Nonlinear residual: alternate between pinning the beta group and
    # the alpha group, zeros first, then seeded small rationals.
    rng = random.Random(seed)
    for attempt in range(max(budget, 0)):
        group = beta if attempt % 2 == 0 else alpha
        if attempt < 2:
            sampled = {v: ZERO for v in group}
        else:
            sampled = {v: _sample_pool(rng) for v in group}
        pinned = [(pos, eq.substitute(sampled)) for pos, eq in system]
        trial = eliminate_affine(pinned)
        if trial.is_contradiction or trial.residual:
            continue
        assignment = _full_assignment(trial.solved, sampled, params)
        try:
            return _verify_witness(sym_a, sym_b, C, X, assignment)
        except ContractError:
            continue
    return Unknown(f"no witness within {budget} sampling attempts; "
                   f"{len(outcome.residual)} nonlinear equations remain")
