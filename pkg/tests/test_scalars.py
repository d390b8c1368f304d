import random
from fractions import Fraction

import pytest

from homhopf.errors import ValidationError
from homhopf.scalars import GF, QQ, FpElement, render_scalar


def test_rational_parsing():
    assert QQ(3) == Fraction(3)
    assert QQ("2/3") == Fraction(2, 3)
    assert QQ("-4/6") == Fraction(-2, 3)
    with pytest.raises(ZeroDivisionError):
        QQ("2/0")


def test_rationals_reduced_positive_denominator():
    x = QQ(Fraction(6, -8))
    assert x.numerator == -3 and x.denominator == 4


def test_gf_arithmetic():
    f = GF(7)
    a, b = f(3), f(5)
    assert (a + b).val == 1
    assert (a - b).val == 5
    assert (a * b).val == 1
    assert (a / b).val == (3 * pow(5, -1, 7)) % 7
    assert -a == f(4)
    assert bool(f(0)) is False and bool(a) is True
    with pytest.raises(ZeroDivisionError):
        a / f(0)


def test_gf_fraction_strings():
    f = GF(7)
    assert f("2/3") == f(2) / f(3)
    with pytest.raises(ZeroDivisionError):
        f("1/7")


def test_gf_rejects_composite_modulus():
    with pytest.raises(ValidationError):
        GF(6)
    with pytest.raises(ValidationError):
        GF(1)


def test_mixed_fields_rejected():
    with pytest.raises(TypeError):
        GF(5)(1) + GF(7)(1)


def test_render_scalar():
    assert render_scalar(Fraction(3)) == 3
    assert render_scalar(Fraction(-2, 5)) == "-2/5"
    assert render_scalar(GF(7)(9)) == 2


def test_rational_gf_agreement():
    # arithmetic over Q, reduced mod p, matches arithmetic in GF(p)
    rng = random.Random(7)
    f = GF(101)
    for _ in range(200):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        for op in (lambda x, y: x + y, lambda x, y: x - y, lambda x, y: x * y):
            exact = op(a, b)
            reduced = op(f.from_rational(a), f.from_rational(b))
            assert f.from_rational(exact) == reduced


def test_fp_element_is_hashable_and_interned_zero():
    f = GF(7)
    assert hash(f(3)) == hash(FpElement(f, 10))
    assert f.zero == f(7)
