import random
from fractions import Fraction

import pytest

from homhopf.catalog import sweedler_h4, z2_group_algebra, z3_group_algebra
from homhopf.errors import NonBijectiveAlpha, NotAnEndomorphism, ValidationError
from homhopf.linalg import CoTensor, Mat, MulTensor, Vec
from homhopf.scalars import GF, QQ
from homhopf.structures import (HomAlgebra, HomCoalgebra, HomHopfAlgebra,
                                check_four_element_identity, check_hom_algebra,
                                check_hom_bialgebra, check_hom_coalgebra,
                                check_hom_hopf, check_quasitriangular,
                                check_reindexing_identities, yau_twist)


def perturb_mul(alg, i, j, k, delta=1):
    data = [list(row) for row in alg.mul.mat.data]
    data[k][i * alg.dim + j] = data[k][i * alg.dim + j] + alg.field(delta)
    return MulTensor(Mat(alg.field, data))


def test_z2_classical_passes(z2):
    assert check_hom_algebra(z2).passed
    assert check_hom_coalgebra(z2).passed
    assert check_hom_bialgebra(z2).passed
    assert check_hom_hopf(z2).passed


def test_h4_twisted_passes(h4t):
    rep = check_hom_hopf(h4t)
    assert rep.passed
    # derived identities are present and flagged
    derived = {r.axiom for r in rep.results if r.derived}
    assert {"antunit", "counit-antipode", "antialg", "coprod-antipode",
            "invant-left", "invant-right"} <= derived


def test_z3_gf7_passes_including_invant(z3gf7):
    rep = check_hom_hopf(z3gf7)
    assert rep.passed
    assert rep.result("invant-left").passed
    assert rep.result("invant-right").passed


def test_algebra_mutation_fails_with_witness(h4t):
    mutated = HomAlgebra(perturb_mul(h4t, 1, 2, 0), h4t.alpha, h4t.unit)
    rep = check_hom_algebra(mutated)
    assert not rep.passed
    bad = rep.failures()[0]
    assert bad.witness is not None
    assert bad.lhs != bad.rhs


def test_coalgebra_mutation_fails(h4t):
    # swap two coproduct constants
    data = [list(row) for row in h4t.comul.mat.data]
    data[2], data[3] = data[3], data[2]
    mutated = HomCoalgebra(CoTensor(Mat(h4t.field, data)), h4t.alpha, h4t.counit)
    assert not check_hom_coalgebra(mutated).passed


def test_mixed_twist_fails_hombia1(h4, h4_endo, h4t):
    # twisted product, untouched coproduct: hombia1 must break
    mixed = HomHopfAlgebra(h4t.mul, h4.comul, h4t.alpha, h4.unit, h4.counit,
                           h4.antipode)
    rep = check_hom_bialgebra(mixed)
    assert not rep.result("hombia1").passed


def test_antipode_mutation_fails_ant(h4t):
    data = [list(row) for row in h4t.antipode.data]
    data[3][2] = -data[3][2]
    mutated = HomHopfAlgebra(h4t.mul, h4t.comul, h4t.alpha, h4t.unit,
                             h4t.counit, Mat(h4t.field, data))
    rep = check_hom_hopf(mutated)
    assert not (rep.result("ant-left").passed and rep.result("ant-right").passed)
    failing = [r for r in (rep.result("ant-left"), rep.result("ant-right"))
               if not r.passed]
    assert failing[0].witness is not None


def test_non_bijective_alpha_rejected(h4):
    degenerate = HomHopfAlgebra(h4.mul, h4.comul,
                                Mat.zero(QQ, 4, 4), h4.unit, h4.counit,
                                h4.antipode)
    with pytest.raises(NonBijectiveAlpha):
        check_hom_hopf(degenerate)


def test_yau_twist_identity_is_identity(h4):
    t = yau_twist(h4, Mat.identity(QQ, 4))
    assert t.mul == h4.mul and t.comul == h4.comul and t.alpha == h4.alpha


def test_yau_twist_h4_matches_catalog(h4, h4_endo, h4t):
    assert yau_twist(h4, h4_endo).mul == h4t.mul


def test_yau_twist_rejects_non_endomorphism(z2):
    # g -> 1 + g is not multiplicative: (1+g)^2 = 2 + 2g != endo(g^2) = 1
    bad = Mat.from_rows(QQ, [[1, 1], [0, 1]])
    with pytest.raises(NotAnEndomorphism):
        yau_twist(z2, bad)


def test_yau_twist_output_passes_checks(h4, h4_endo):
    assert check_hom_hopf(yau_twist(h4, h4_endo)).passed


def test_alpha_id_degeneracy_random_classical_algebras():
    # with alpha = id the checker accepts exactly the associative tables
    rng = random.Random(31)
    zero_table = [[[0, 0]] * 2] * 2
    z2_table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    tables = [zero_table, z2_table]
    tables += [[[[Fraction(rng.randint(-1, 1)) for _ in range(2)]
                 for _ in range(2)] for _ in range(2)] for _ in range(40)]
    seen_pass = seen_fail = 0
    for table in tables:
        alg = HomAlgebra(MulTensor.from_table(QQ, table), Mat.identity(QQ, 2))
        rep = check_hom_algebra(alg)
        # classical associativity oracle by direct loops
        assoc = True
        mul = alg.mul
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    lhs = mul.apply2(Vec.basis(QQ, 2, i), mul.c(j, k))
                    rhs = mul.apply2(mul.c(i, j), Vec.basis(QQ, 2, k))
                    if lhs != rhs:
                        assoc = False
        assert rep.passed == assoc
        seen_pass += assoc
        seen_fail += not assoc
    assert seen_pass and seen_fail


def test_quasitriangular_trivial_r_on_cocommutative(z2):
    r = z2.unit.tensor(z2.unit)
    assert check_quasitriangular(z2, r).passed


def test_quasitriangular_trivial_r_fails_on_h4(h4):
    r = h4.unit.tensor(h4.unit)
    rep = check_quasitriangular(h4, r)
    assert not rep.result("homQT3").passed
    assert rep.result("homQT3").witness is not None


def test_quasitriangular_needs_unit_and_counit(h4):
    from homhopf.structures import HomBialgebra
    bare = HomBialgebra(h4.mul, h4.comul, h4.alpha)
    with pytest.raises(ValidationError):
        check_quasitriangular(bare, h4.unit.tensor(h4.unit))


def test_reindexing_identities_hold(h4t, z3gf7):
    assert check_reindexing_identities(h4t).passed
    assert check_reindexing_identities(z3gf7).passed


def test_four_element_identity(h4t, z3gf7):
    assert check_four_element_identity(h4t).passed
    assert check_four_element_identity(z3gf7).passed


def test_checker_agrees_over_prime_field(h4t):
    # exactness: the whole Hopf suite over Q agrees with its mod-p reduction
    p = GF(101)

    def red_mat(m):
        return Mat(p, [[p.from_rational(v) for v in row] for row in m.data])

    def red_vec(v):
        return Vec(p, [p.from_rational(x) for x in v.entries])

    reduced = HomHopfAlgebra(MulTensor(red_mat(h4t.mul.mat)),
                             CoTensor(red_mat(h4t.comul.mat)),
                             red_mat(h4t.alpha), red_vec(h4t.unit),
                             red_vec(h4t.counit), red_mat(h4t.antipode))
    rep_q = check_hom_hopf(h4t)
    rep_p = check_hom_hopf(reduced)
    assert [(r.axiom, r.passed) for r in rep_q] == \
        [(r.axiom, r.passed) for r in rep_p]


def test_classical_z3_over_q_and_gf7_agree():
    over_q = check_hom_hopf(z3_group_algebra(QQ))
    over_p = check_hom_hopf(z3_group_algebra(GF(7)))
    assert over_q.passed and over_p.passed
