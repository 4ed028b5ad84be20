"""Parametric {1}-inverse families built from the rank normal form."""

import pytest

from ginv.errors import ContractError, ShapeError
from ginv.matrix import ExactMatrix
from ginv.oneinv import (OneInverseFamily, family_from, instantiate,
                         is_one_inverse, symbolic_family)
from ginv.poly import SymMatrix

from conftest import (DEMO_A, DEMO_B, SCALAR_POOL, random_matrix,
                      random_matrix_with_rank)
from oracles import brute_rank


def test_demo_family_shapes():
    fam = family_from(DEMO_A)
    assert (fam.m, fam.n, fam.a) == (3, 3, 2)
    assert fam.u_shape == (2, 1)
    assert fam.v_shape == (1, 2)
    assert fam.w_shape == (1, 1)
    assert fam.param_count == 5          # 3*3 - 2*2


def test_canonical_is_one_inverse():
    A = DEMO_A
    fam = family_from(A)
    G = fam.canonical()
    assert is_one_inverse(A, G)
    assert A @ G @ A == A
    # Canonical member is the all-zero-blocks instantiation.
    assert G == fam.instantiate()


def test_instantiate_block_validation():
    fam = family_from(DEMO_A)
    with pytest.raises(ShapeError):
        fam.instantiate(U=ExactMatrix([[1, 2]]))          # wants 2x1
    with pytest.raises(ShapeError):
        fam.instantiate(W=ExactMatrix([[1], [2]]))        # wants 1x1
    ok = fam.instantiate(U=ExactMatrix([[1], [2]]),
                         V=ExactMatrix([[3, 4]]),
                         W=ExactMatrix([[5]]))
    assert is_one_inverse(DEMO_A, ok)


def test_every_instantiation_is_one_inverse(rng):
    for _ in range(40):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        a = rng.randrange(0, min(m, n) + 1)
        A = random_matrix_with_rank(rng, m, n, a)
        fam = family_from(A)
        assert fam.a == a
        assert fam.param_count == m * n - a * a
        U = random_matrix(rng, *fam.u_shape)
        V = random_matrix(rng, *fam.v_shape)
        W = random_matrix(rng, *fam.w_shape)
        G = fam.instantiate(U, V, W)
        assert G.shape == (n, m)
        assert A @ G @ A == A
        assert is_one_inverse(A, G)


def test_regular_matrix_family_is_the_inverse(rng):
    # Full-rank square source: zero parameters, the unique member is A^-1.
    from ginv.matrix import inverse_regular
    from conftest import random_regular
    A = random_regular(rng, 3)
    fam = family_from(A)
    assert fam.param_count == 0
    assert fam.canonical() == inverse_regular(A)


def test_blocks_of_round_trip(rng):
    A = DEMO_A
    fam = family_from(A)
    U = ExactMatrix([[2], [-1]])
    V = ExactMatrix([[0, 3]])
    W = ExactMatrix([[-2]])
    G = fam.instantiate(U, V, W)
    blocks = fam.blocks_of(G)
    assert blocks == (U, V, W)


def test_blocks_of_rejects_non_member():
    A = DEMO_A
    fam = family_from(A)
    assert fam.blocks_of(ExactMatrix.zeros(3, 3)) is None
    # A wrong-shaped candidate is a usage error, not merely a non-member.
    with pytest.raises(ShapeError):
        fam.blocks_of(ExactMatrix.zeros(2, 3))


def test_family_covers_all_one_inverses(rng):
    # Surjectivity: every G with A G A = A yields blocks that rebuild it.
    for _ in range(25):
        m, n = rng.randrange(1, 4), rng.randrange(1, 4)
        A = random_matrix(rng, m, n)
        fam = family_from(A)
        U = random_matrix(rng, *fam.u_shape)
        V = random_matrix(rng, *fam.v_shape)
        W = random_matrix(rng, *fam.w_shape)
        G = fam.instantiate(U, V, W)
        got = fam.blocks_of(G)
        assert got is not None
        assert fam.instantiate(*got) == G


def test_is_one_inverse_shape_contract():
    A = DEMO_A
    with pytest.raises(ShapeError):
        is_one_inverse(A, ExactMatrix.zeros(3, 2))
    assert not is_one_inverse(A, ExactMatrix.zeros(3, 3))


def test_module_level_instantiate_alias():
    fam = family_from(DEMO_A)
    assert instantiate(fam) == fam.canonical()


def test_zero_matrix_family():
    # rank 0: every n x m matrix is a {1}-inverse of the zero matrix.
    A = ExactMatrix.zeros(2, 3)
    fam = family_from(A)
    assert fam.a == 0
    assert fam.param_count == 6
    G = ExactMatrix([[1, 2], [3, 4], [5, 6]])
    blocks = fam.blocks_of(G)
    assert blocks is not None
    assert fam.instantiate(*blocks) == G


# -- symbolic families ---------------------------------------------------------


def test_symbolic_default_names():
    sym = symbolic_family(DEMO_A)
    names = [v.name for v in sym.params]
    assert names == ["u_{1,1}", "u_{2,1}", "v_{1,1}", "v_{1,2}", "w_{1,1}"]
    assert [v.id for v in sym.params] == [0, 1, 2, 3, 4]


def test_symbolic_custom_names_and_ids():
    sym = symbolic_family(DEMO_A, names="abcde", id_start=10)
    assert [v.name for v in sym.params] == ["a", "b", "c", "d", "e"]
    assert [v.id for v in sym.params] == [10, 11, 12, 13, 14]
    with pytest.raises(ContractError):
        symbolic_family(DEMO_A, names=["a", "b"])


def test_symbolic_family_satisfies_defining_identity():
    for A in (DEMO_A, DEMO_B):
        sym = symbolic_family(A)
        SA = SymMatrix.from_exact(A)
        assert (SA @ sym.matrix @ SA - SA).is_zero()


def test_symbolic_closed_form_demo_a():
    # Known closed form of the family for the running 3x3 example.
    sym = symbolic_family(DEMO_A, names="abcde")
    a, b, c, d, e = sym.params
    expected = SymMatrix([
        [1 - a + 2 * b - c + e, -2 + a - 2 * b - d - e, a - 2 * b - e],
        [-b, 1 + b, b],
        [c - e, d + e, e],
    ])
    assert sym.matrix == expected


def test_symbolic_closed_form_demo_b():
    sym = symbolic_family(DEMO_B, names=["g", "h", "p", "q", "r"])
    g, h, p, q, r = sym.params
    expected = SymMatrix([
        [1 - g - 2 * h - p + q + 2 * r, g - q, h - r],
        [p - q - 2 * r, q, r],
    ])
    assert sym.matrix == expected


def test_symbolic_instantiate_matches_numeric(rng):
    A = random_matrix_with_rank(rng, 3, 4, 2)
    fam = family_from(A)
    sym = fam.symbolic()
    for _ in range(10):
        point = {v: rng.choice(SCALAR_POOL) for v in sym.params}
        G = sym.instantiate(point)
        assert G == sym.matrix.evaluate(point)
        U, V, W = sym.blocks_from(point)
        assert fam.instantiate(U, V, W) == G
        assert is_one_inverse(A, G)


def test_family_source_and_rnf_exposed():
    A = DEMO_A
    fam = OneInverseFamily(A, __import__("ginv.matrix", fromlist=["rank_normal_form"]).rank_normal_form(A))
    assert fam.source == A
    assert fam.rnf.q @ A @ fam.rnf.p == ExactMatrix.e_block(3, 3, 2)
    with pytest.raises(AttributeError):
        fam.source = A
