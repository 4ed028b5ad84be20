"""The complete parametric family of {1}-inverses of a matrix.

Every {1}-inverse of an m x n matrix A of rank a (every G with A*G*A = A)
has the form

    G = P * [[I_a, U], [V, W]] * Q

for the rank-normal-form factors Q, P of A, where the blocks U (a x (m-a)),
V ((n-a) x a) and W ((n-a) x (m-a)) range freely over all m*n - a*a scalar
parameters.  The family is pinned to the deterministic factorization
produced by :func:`ginv.matrix.rank_normal_form`; other (Q, P) choices
reparametrize the same set.
"""

from __future__ import annotations

from .errors import ContractError, ShapeError
from .matrix import ExactMatrix, RankNormalForm, inverse_regular, rank_normal_form
from .poly import Poly, SymMatrix, Variable, fresh_variables

__all__ = ["OneInverseFamily", "SymbolicOneInverse", "family_from",
           "instantiate", "is_one_inverse", "symbolic_family"]


class OneInverseFamily:
    """All {1}-inverses of one matrix, in Rohde block form."""

    __slots__ = ("source", "rnf", "m", "n", "a")

    def __init__(self, source: ExactMatrix, rnf: RankNormalForm):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "rnf", rnf)
        object.__setattr__(self, "m", source.rows)
        object.__setattr__(self, "n", source.cols)
        object.__setattr__(self, "a", rnf.rank)

    def __setattr__(self, name, value):
        raise AttributeError("OneInverseFamily is immutable")

    @property
    def u_shape(self):
        return (self.a, self.m - self.a)

    @property
    def v_shape(self):
        return (self.n - self.a, self.a)

    @property
    def w_shape(self):
        return (self.n - self.a, self.m - self.a)

    @property
    def param_count(self) -> int:
        return self.m * self.n - self.a * self.a

    def _check_block(self, M, shape, label):
        if M is None:
            r, c = shape
            return (ExactMatrix.zeros(r, c) if r and c
                    else ExactMatrix.empty(r, c))
        if M.shape != shape:
            raise ShapeError(f"{label} block", M.shape, shape)
        return M

    def instantiate(self, U=None, V=None, W=None) -> ExactMatrix:
        """The member P*[[I,U],[V,W]]*Q; None blocks default to zero."""
        U = self._check_block(U, self.u_shape, "U")
        V = self._check_block(V, self.v_shape, "V")
        W = self._check_block(W, self.w_shape, "W")
        middle = ExactMatrix.block([[ExactMatrix.identity(self.a), U], [V, W]])
        return self.rnf.p @ middle @ self.rnf.q

    def canonical(self) -> ExactMatrix:
        """The zero-block member."""
        return self.instantiate()

    def blocks_of(self, G: ExactMatrix):
        """Recover (U, V, W) with G = P*[[I,U],[V,W]]*Q, or None if G is
        not a {1}-inverse (the top-left block of P^-1*G*Q^-1 is not I_a)."""
        if G.shape != (self.n, self.m):
            raise ShapeError("candidate {1}-inverse", G.shape, (self.n, self.m))
        middle = inverse_regular(self.rnf.p) @ G @ inverse_regular(self.rnf.q)
        a = self.a
        if middle.submatrix(range(1, a + 1), range(1, a + 1)) != ExactMatrix.identity(a):
            return None
        U = middle.submatrix(range(1, a + 1), range(a + 1, self.m + 1))
        V = middle.submatrix(range(a + 1, self.n + 1), range(1, a + 1))
        W = middle.submatrix(range(a + 1, self.n + 1), range(a + 1, self.m + 1))
        return U, V, W

    def symbolic(self, names=None, id_start: int = 0) -> "SymbolicOneInverse":
        """Symbolic member with one fresh variable per block position.

        ``names`` supplies the k = m*n - a*a variable names in block order
        (U row-major, then V, then W); by default subscripted u/v/w names
        are generated.  Too few names is an error.
        """
        k = self.param_count
        if names is None:
            names = self._default_names()
        else:
            names = list(names)
            if len(names) < k:
                raise ContractError(
                    f"need {k} parameter names, got {len(names)}")
            names = names[:k]
        params = fresh_variables(names, start=id_start)
        return SymbolicOneInverse(self, tuple(params))

    def _default_names(self):
        names = []
        for label, (r, c) in (("u", self.u_shape), ("v", self.v_shape),
                              ("w", self.w_shape)):
            names.extend(f"{label}_{{{i},{j}}}"
                         for i in range(1, r + 1) for j in range(1, c + 1))
        return names


class SymbolicOneInverse:
    """A symbolic {1}-inverse: matrix entries are affine in the parameters."""

    __slots__ = ("family", "params", "matrix")

    def __init__(self, family: OneInverseFamily, params):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)
        a, m, n = family.a, family.m, family.n
        it = iter(params)
        u = [[Poly.variable(next(it)) for _ in range(m - a)] for _ in range(a)]
        v = [[Poly.variable(next(it)) for _ in range(a)] for _ in range(n - a)]
        w = [[Poly.variable(next(it)) for _ in range(m - a)] for _ in range(n - a)]
        middle = [[Poly.constant(1) if i == j else Poly.zero()
                   for j in range(a)] + u[i] for i in range(a)]
        middle += [v[i] + w[i] for i in range(n - a)]
        sym = (SymMatrix.from_exact(family.rnf.p)
               @ SymMatrix(middle)
               @ SymMatrix.from_exact(family.rnf.q)) if n else SymMatrix([])
        object.__setattr__(self, "matrix", sym)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicOneInverse is immutable")

    def blocks_from(self, assignment):
        """Numeric (U, V, W) blocks for a parameter assignment."""
        fam = self.family
        it = iter(self.params)

        def build(shape):
            r, c = shape
            if not (r and c):
                for _ in range(r * c):
                    next(it)
                return ExactMatrix.empty(r, c)
            return ExactMatrix([[assignment[next(it)] for _ in range(c)]
                                for _ in range(r)])

        return build(fam.u_shape), build(fam.v_shape), build(fam.w_shape)

    def instantiate(self, assignment) -> ExactMatrix:
        """Numeric member at a full parameter assignment."""
        U, V, W = self.blocks_from(assignment)
        return self.family.instantiate(U, V, W)


def family_from(A: ExactMatrix) -> OneInverseFamily:
    """The family of all {1}-inverses of A."""
    return OneInverseFamily(A, rank_normal_form(A))


def instantiate(fam: OneInverseFamily, U=None, V=None, W=None) -> ExactMatrix:
    return fam.instantiate(U, V, W)


def is_one_inverse(A: ExactMatrix, G: ExactMatrix) -> bool:
    """True iff A*G*A = A exactly."""
    if G.shape != (A.cols, A.rows):
        raise ShapeError("{1}-inverse check", G.shape, (A.cols, A.rows))
    return A @ G @ A == A


def symbolic_family(A: ExactMatrix, names=None, id_start: int = 0) -> SymbolicOneInverse:
    """Symbolic Rohde family of A (see OneInverseFamily.symbolic)."""
    return family_from(A).symbolic(names, id_start)
