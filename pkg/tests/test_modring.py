"""Tests for arithmetic in Z_m."""

import itertools

import pytest

from powerbracket.modring import ModulusMismatch, NotAUnit, RingElem, RingZm, units


def test_add_wraps():
    r = RingZm(6)
    assert int(r.elem(3) + r.elem(3)) == 0
    assert int(RingZm(5).elem(2) + RingZm(5).elem(4)) == 1


def test_add_identity():
    r = RingZm(7)
    for x in range(7):
        assert int(r.elem(0) + r.elem(x)) == x


def test_mul():
    r = RingZm(6)
    assert int(r.elem(5) * r.elem(5)) == 1
    assert int(r.elem(2) * r.elem(3)) == 0
    for x in range(6):
        assert int(r.elem(1) * r.elem(x)) == x


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        RingZm(4).elem(1) + RingZm(5).elem(1)


def test_inv():
    assert int(RingZm(6).elem(5).inv()) == 5
    assert int(RingZm(5).elem(2).inv()) == 3
    with pytest.raises(NotAUnit):
        RingZm(6).elem(2).inv()


def test_pow():
    r = RingZm(6)
    assert int(r.elem(5) ** -4) == 1
    assert int(r.elem(4) ** 0) == 1
    assert int(RingZm(5).elem(3) ** 2) == 4
    with pytest.raises(NotAUnit):
        RingZm(6).elem(3) ** -1


def test_units():
    assert [int(u) for u in units(RingZm(6))] == [1, 5]
    assert [int(u) for u in units(RingZm(5))] == [1, 2, 3, 4]
    assert [int(u) for u in units(RingZm(2))] == [1]


def test_unit_times_inverse_is_one():
    for m in range(2, 13):
        r = RingZm(m)
        for u in units(r):
            assert int(u * u.inv()) == 1


def test_pow_is_homomorphic_on_exponents():
    r = RingZm(12)
    for u in units(r):
        for e1 in range(-8, 9):
            for e2 in range(-8, 9):
                assert u ** (e1 + e2) == (u**e1) * (u**e2)


def test_add_mul_commutative_associative_small():
    for m in range(2, 9):
        r = RingZm(m)
        elems = [r.elem(v) for v in range(m)]
        for a, b, c in itertools.product(elems, repeat=3):
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)


def test_modulus_bounds():
    with pytest.raises(ValueError):
        RingZm(1)
    with pytest.raises(ValueError):
        RingZm(2**31)
    RingZm(2**31 - 1)


def test_canonicalization():
    assert RingElem(-1, RingZm(6)).value == 5
    assert RingZm(6).elem(13).value == 1
