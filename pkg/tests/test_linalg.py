import random
from fractions import Fraction

import pytest

from homhopf.errors import DimensionMismatch, SingularMap
from homhopf.linalg import (CoTensor, Mat, MulTensor, Vec, block_diag,
                            contract, flip_matrix, invert_linear_map, kron,
                            permute_legs)
from homhopf.scalars import GF, QQ


def rand_mat(rng, field, n, m=None):
    m = m or n
    return Mat.from_rows(field, [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                  for _ in range(m)] for _ in range(n)])


def test_invert_identity():
    m = Mat.identity(QQ, 3)
    assert invert_linear_map(m) == m


def test_invert_involution():
    m = Mat.from_rows(QQ, [[0, 1], [1, 0]])
    assert invert_linear_map(m) == m


def test_invert_h4_sign_map():
    m = Mat.diagonal(QQ, [1, 1, -1, -1])
    assert invert_linear_map(m) == m


def test_invert_2x2_against_adjugate():
    # independent oracle: cofactor formula for 2x2
    rng = random.Random(11)
    for _ in range(25):
        a, b, c, d = (Fraction(rng.randint(-5, 5)) for _ in range(4))
        det = a * d - b * c
        m = Mat.from_rows(QQ, [[a, b], [c, d]])
        if det == 0:
            with pytest.raises(SingularMap):
                m.inverse()
            continue
        adj = Mat.from_rows(QQ, [[d / det, -b / det], [-c / det, a / det]])
        assert m.inverse() == adj


def test_invert_3x3_against_adjugate():
    rng = random.Random(13)
    for _ in range(15):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        m = Mat.from_rows(QQ, rows)

        def minor(i, j):
            sub = [[rows[r][c] for c in range(3) if c != j]
                   for r in range(3) if r != i]
            return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]

        det = sum((-1) ** j * rows[0][j] * minor(0, j) for j in range(3))
        if det == 0:
            with pytest.raises(SingularMap):
                m.inverse()
            continue
        adj = Mat.from_rows(QQ, [[(-1) ** (i + j) * minor(j, i) / det
                                  for j in range(3)] for i in range(3)])
        assert m.inverse() == adj


def test_inverse_composes_to_identity_both_orders():
    rng = random.Random(5)
    for _ in range(10):
        m = rand_mat(rng, QQ, 4)
        try:
            inv = m.inverse()
        except SingularMap:
            continue
        assert (m @ inv).is_identity()
        assert (inv @ m).is_identity()


def test_kron_identities():
    assert kron(Mat.identity(QQ, 2), Mat.identity(QQ, 3)) == Mat.identity(QQ, 6)
    d = kron(Mat.diagonal(QQ, [1, -1]), Mat.diagonal(QQ, [1, -1]))
    assert d == Mat.diagonal(QQ, [1, -1, -1, 1])


def test_kron_respects_composition():
    rng = random.Random(3)
    for _ in range(10):
        f, g, f2, g2 = (rand_mat(rng, QQ, 2) for _ in range(4))
        assert kron(f, g) @ kron(f2, g2) == kron(f @ f2, g @ g2)


def test_kron_associative_in_fixed_ordering():
    rng = random.Random(4)
    f, g, h = rand_mat(rng, QQ, 2), rand_mat(rng, QQ, 3), rand_mat(rng, QQ, 2)
    assert kron(kron(f, g), h) == kron(f, kron(g, h))


def test_gaussian_elimination_over_gf():
    f = GF(7)
    m = Mat.from_rows(f, [[2, 3], [1, 4]])
    inv = m.inverse()
    assert (m @ inv).is_identity()


def test_rational_gf_reduction_commutes_with_ops():
    # exactness invariant: compute over Q, reduce mod p; or reduce, then compute
    rng = random.Random(17)
    p = GF(101)

    def reduce_mat(m):
        return Mat(p, [[p.from_rational(v) for v in row] for row in m.data])

    for _ in range(10):
        a = rand_mat(rng, QQ, 3)
        b = rand_mat(rng, QQ, 3)
        assert reduce_mat(a @ b) == reduce_mat(a) @ reduce_mat(b)
        assert reduce_mat(kron(a, b)) == kron(reduce_mat(a), reduce_mat(b))
        try:
            ia = a.inverse()
        except SingularMap:
            continue
        denoms = {v.denominator for row in ia.data for v in row}
        if all(d % 101 for d in denoms):
            assert reduce_mat(ia) == reduce_mat(a).inverse()


def test_permute_legs_flip():
    fl = flip_matrix(QQ, 2, 3)
    v = Vec.basis(QQ, 2, 1).tensor(Vec.basis(QQ, 3, 2))
    assert fl.apply(v) == Vec.basis(QQ, 3, 2).tensor(Vec.basis(QQ, 2, 1))


def test_permute_legs_three_factors():
    pm = permute_legs(QQ, [2, 3, 2], [0, 2, 1])
    v = (Vec.basis(QQ, 2, 1).tensor(Vec.basis(QQ, 3, 2))
         .tensor(Vec.basis(QQ, 2, 0)))
    want = (Vec.basis(QQ, 2, 1).tensor(Vec.basis(QQ, 2, 0))
            .tensor(Vec.basis(QQ, 3, 2)))
    assert pm.apply(v) == want


def test_block_diag():
    m = block_diag(Mat.identity(QQ, 2), Mat.diagonal(QQ, [5]))
    assert m == Mat.diagonal(QQ, [1, 1, 5])


def test_contract_group_law():
    # Z2 basis (1, g): products and coproduct on basis vectors
    mul = MulTensor.from_table(QQ, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    g = Vec.basis(QQ, 2, 1)
    assert contract(mul, g, g) == Vec.basis(QQ, 2, 0)
    comul = CoTensor.from_table(
        QQ, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    assert contract(comul, g) == g.tensor(g)


def test_contract_bilinearity():
    rng = random.Random(23)
    mul = MulTensor.from_table(QQ, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    for _ in range(20):
        x, y, z = (Vec.from_values(QQ, [rng.randint(-4, 4) for _ in range(2)])
                   for _ in range(3))
        lhs = contract(mul, x.scale(QQ(2)), y + z)
        rhs = contract(mul, x, y).scale(QQ(2)) + contract(mul, x, z).scale(QQ(2))
        assert lhs == rhs


def test_contract_dimension_mismatch():
    mul = MulTensor.from_table(QQ, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    with pytest.raises(DimensionMismatch):
        contract(mul, Vec.basis(QQ, 3, 0), Vec.basis(QQ, 2, 0))


def test_apply2_matches_kron_route():
    rng = random.Random(29)
    m = rand_mat(rng, QQ, 2, 6)
    x = Vec.from_values(QQ, [rng.randint(-3, 3) for _ in range(2)])
    y = Vec.from_values(QQ, [rng.randint(-3, 3) for _ in range(3)])
    assert m.apply2(x, y) == m.apply(x.tensor(y))


def test_mul_tensor_table_round_trip():
    table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    mul = MulTensor.from_table(QQ, table)
    assert [[list(c) for c in row] for row in mul.table()] == \
        [[[QQ(v) for v in cell] for cell in row] for row in table]
