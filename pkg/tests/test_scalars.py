"""Exact scalar arithmetic: rationals extended by a square root."""

import random
from fractions import Fraction

import pytest

from nhlab.scalars import (QuadraticScalar, ScalarField, UnsupportedField,
                           quad, sc_div, sc_sign, sc_str)


def rand_quad(rnd, d=5):
    a = Fraction(rnd.randrange(-9, 10), rnd.randrange(1, 7))
    b = Fraction(rnd.randrange(-9, 10), rnd.randrange(1, 7))
    return quad(a, b, d)


def test_rational_collapse():
    assert quad(3, 0, 5) == Fraction(3)
    assert isinstance(quad(Fraction(2, 3), 0, 5), Fraction)
    assert isinstance(quad(1, 1, 5), QuadraticScalar)


def test_component_round_trip():
    x = quad(Fraction(3, 4), Fraction(-5, 6), 5)
    assert x.a == Fraction(3, 4)
    assert x.b == Fraction(-5, 6)
    assert x.d == 5


def test_normalized_internal_triple():
    # stored as (an + bn*sqrt(d)) / den with den > 0 and gcd 1
    rnd = random.Random(0)
    for _ in range(200):
        x = rand_quad(rnd)
        if isinstance(x, Fraction):
            continue
        from math import gcd
        assert x.den > 0
        assert gcd(gcd(abs(x.an), abs(x.bn)), x.den) == 1
        assert Fraction(x.an, x.den) == x.a
        assert Fraction(x.bn, x.den) == x.b


def test_golden_ratio():
    g = quad(Fraction(1, 2), Fraction(1, 2), 5)
    assert g * g == g + 1
    assert 1 / g == g - 1
    assert g ** 4 == 3 * g + 2


def test_field_laws_random():
    rnd = random.Random(1)
    for _ in range(300):
        x, y, z = (rand_quad(rnd) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - y == -(y - x)
        if y != 0:
            assert (x / y) * y == x


def test_inverse_and_pow():
    x = quad(2, -3, 5)
    assert x * (1 / x) == 1
    assert x ** 0 == 1
    assert x ** 3 == x * x * x
    with pytest.raises(ZeroDivisionError):
        sc_div(1, quad(0, 0, 5))


def test_mixed_with_rationals():
    x = quad(1, 1, 5)
    assert x + Fraction(1, 2) == quad(Fraction(3, 2), 1, 5)
    assert 2 * x == quad(2, 2, 5)
    assert x - 1 == quad(0, 1, 5)
    assert Fraction(1, 2) - x == quad(Fraction(-1, 2), -1, 5)
    assert 3 / quad(0, 1, 5) == quad(0, Fraction(3, 5), 5)


def test_eq_hash_consistency():
    rnd = random.Random(2)
    for _ in range(100):
        x = rand_quad(rnd)
        y = Fraction(x) if isinstance(x, Fraction) else quad(x.a, x.b, 5)
        assert x == y
        assert hash(x) == hash(y)


def test_sign():
    assert quad(3, -2, 5).sign() == -1      # 3 - 2*sqrt5 < 0
    assert quad(-3, 2, 5).sign() == 1
    assert quad(Fraction(9, 4), -1, 5).sign() == 1   # 9/4 > sqrt5
    assert sc_sign(Fraction(-2)) == -1
    assert sc_sign(Fraction(0)) == 0


def test_different_radicands_do_not_mix():
    x = quad(1, 1, 5)
    y = quad(1, 1, 2)
    with pytest.raises(UnsupportedField):
        x + y


def test_scalar_field():
    assert ScalarField(0).d == 0
    assert ScalarField.parse("rational").d == 0
    assert ScalarField.parse("quadratic:5").d == 5
    with pytest.raises(UnsupportedField):
        ScalarField.parse("quadratic:4")    # not squarefree


def test_str_forms():
    assert sc_str(Fraction(-3, 2)) == "-3/2"
    s = sc_str(quad(Fraction(1, 2), Fraction(1, 2), 5))
    assert "sqrt5" in s
