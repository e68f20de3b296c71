"""Exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest

from monohopf.cyclo import (CycloNum, RootOfUnity, as_root_of_unity,
                            cyclotomic_polynomial, divisors, euler_phi,
                            order_of, primitive_roots)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    for n in range(1, 30):
        poly = cyclotomic_polynomial(n)
        assert len(poly) == euler_phi(n) + 1
        assert poly[-1] == 1


def test_euler_phi_divisors():
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_rational_arithmetic():
    a = CycloNum.from_rational(Fraction(3, 4))
    b = CycloNum.from_rational(Fraction(1, 4))
    assert (a + b).is_one()
    assert (a - a).is_zero()
    assert (a * b).as_rational() == Fraction(3, 16)
    assert (a / b).as_rational() == 3
    assert (-a).as_rational() == Fraction(-3, 4)
    assert a.inverse().as_rational() == Fraction(4, 3)


def test_root_powers_reduce():
    z5 = CycloNum.root(5)
    acc = CycloNum.one(5)
    total = CycloNum.zero(5)
    for _ in range(5):
        total = total + acc
        acc = acc * z5
    assert acc.is_one()          # z5^5 = 1
    assert total.is_zero()       # 1 + z5 + ... + z5^4 = 0


def test_cross_conductor_equality_and_embedding():
    z3 = CycloNum.root(3)
    z6 = CycloNum.root(6)
    assert z6 * z6 == z3                     # zeta_6^2 = zeta_3
    assert z3.embed(12) == CycloNum.root(12) ** 4
    assert CycloNum.one(3) == CycloNum.one(8)
    assert z3 != CycloNum.root(4)


def test_inverse_via_extended_euclid():
    for n in (3, 4, 5, 7, 8, 9, 12):
        z = CycloNum.root(n)
        v = CycloNum.one(n) + z + z * z      # invertible in Q(zeta_n)
        if v.is_zero():
            continue
        assert (v * v.inverse()).is_one()
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero(4).inverse()


def test_division_and_powers():
    z8 = CycloNum.root(8)
    assert (z8 ** 8).is_one()
    assert (z8 ** -1) * z8 == CycloNum.one(8)
    sqrt2 = z8 + z8 ** -1
    assert (sqrt2 * sqrt2).as_rational() == 2


def test_hash_disabled_key_usable():
    z = CycloNum.root(4)
    assert CycloNum.__hash__ is None
    d = {z.key(): "i"}
    assert d[CycloNum.root(4).key()] == "i"


def test_root_of_unity_reduction():
    assert RootOfUnity(4, 2) == RootOfUnity(2, 1)
    assert RootOfUnity(6, 4) == RootOfUnity(3, 2)
    assert RootOfUnity(5, 0) == RootOfUnity(1, 0)
    r = RootOfUnity(12, 5)
    assert r.order == 12
    assert (r ** 12).order == 1
    assert (r * r).order == 6


def test_order_of_and_as_root_of_unity():
    assert order_of(RootOfUnity(6, 1)) == 6
    assert order_of(CycloNum.from_rational(-1)) == 2
    assert order_of(CycloNum.root(5) ** 2) == 5
    with pytest.raises(ValueError):
        order_of(CycloNum.from_rational(2))
    with pytest.raises(ValueError):
        order_of(CycloNum.zero(3))
    for n in (1, 2, 3, 4, 6, 8, 12):
        for k in range(n):
            z = RootOfUnity(n, k)
            assert as_root_of_unity(z.to_cyclo()) == z


def test_primitive_roots():
    assert primitive_roots(1) == (RootOfUnity(1, 0),)
    assert primitive_roots(2) == (RootOfUnity(2, 1),)
    assert len(primitive_roots(12)) == 4
    for r in primitive_roots(10):
        assert r.order == 10
