import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cssdiag.cyclotomic import Cyclotomic, cyclo_sum, from_signed_buckets


def test_constructors_and_equality_across_levels():
    # zeta_8^2 = i = zeta_4
    assert Cyclotomic.root_power(3, 2) == Cyclotomic.root_power(2, 1)
    assert Cyclotomic.root_power(3, 4) == Cyclotomic.integer(-1)
    assert Cyclotomic.root_power(1, 1) == Cyclotomic.integer(-1)
    assert Cyclotomic.root_power(3, 8) == Cyclotomic.one()


def test_denominator_normalization():
    assert Cyclotomic.make(1, [4], 2) == Cyclotomic.integer(1)
    assert Cyclotomic.make(2, [2, 2], 1) == Cyclotomic.make(2, [1, 1], 0)
    half = Cyclotomic.dyadic(1, 1)
    assert half + half == Cyclotomic.one()


def test_addition_and_subtraction():
    z = Cyclotomic.root_power(3, 1)
    assert z - z == Cyclotomic.zero()
    assert (z + z) == Cyclotomic.make(3, [0, 2, 0, 0])


def test_multiplication_wraps_with_sign():
    z = Cyclotomic.root_power(3, 3)
    assert z * z == Cyclotomic.root_power(3, 6)
    # zeta^3 * zeta^6 = zeta^9 = zeta
    assert z * Cyclotomic.root_power(3, 6) == Cyclotomic.root_power(3, 1)


def test_conjugation_and_norm():
    z = Cyclotomic.root_power(3, 5)
    assert z.conj() == Cyclotomic.root_power(3, -5)
    assert z.norm_squared() == Cyclotomic.one()
    a = Cyclotomic.make(3, [1, 0, 0, -1], 1)  # (1 + zeta^7)/2
    n2 = a.norm_squared()
    # |1 + e^{-i pi/4}|^2 / 4 = (2 + sqrt(2))/4
    assert abs(n2.to_complex() - (2 + 2 ** 0.5) / 4) < 1e-12
    assert n2.conj() == n2


def test_to_complex_matches_cmath():
    for level in (1, 2, 3, 4):
        for t in range(1 << level):
            z = Cyclotomic.root_power(level, t)
            expected = cmath.exp(1j * cmath.pi * t / (1 << (level - 1)))
            assert abs(z.to_complex() - expected) < 1e-12


def test_from_signed_buckets():
    # 3*zeta^0 - zeta^2 + 2*zeta^5 at level 3, denominator 4
    buckets = [3, 0, -1, 0, 0, 2, 0, 0]
    got = from_signed_buckets(3, buckets, 2)
    assert got == Cyclotomic.make(3, [3, -2, -1, 0], 2)


def test_json_roundtrip():
    a = Cyclotomic.make(3, [1, 0, 0, -1], 1)
    assert Cyclotomic.from_json(a.to_json()) == a


def test_str_forms():
    assert str(Cyclotomic.one()) == "1"
    assert str(Cyclotomic.zero()) == "0"
    assert "/2" in str(Cyclotomic.make(2, [1, 1], 1))


def test_invalid_construction():
    with pytest.raises(ValueError):
        Cyclotomic(0, (1,), 0)
    with pytest.raises(ValueError):
        Cyclotomic(2, (1,), 0)
    with pytest.raises(ValueError):
        Cyclotomic(1, (1,), -1)


def _random_cyclotomic(data) -> Cyclotomic:
    level = data.draw(st.integers(1, 4))
    half = 1 << (level - 1)
    coeffs = [data.draw(st.integers(-6, 6)) for _ in range(half)]
    den = data.draw(st.integers(0, 3))
    return Cyclotomic.make(level, coeffs, den)


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_ring_axioms(data):
    a = _random_cyclotomic(data)
    b = _random_cyclotomic(data)
    c = _random_cyclotomic(data)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Cyclotomic.one() == a
    assert a + Cyclotomic.zero() == a


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_conjugation_is_ring_map_and_matches_floats(data):
    a = _random_cyclotomic(data)
    b = _random_cyclotomic(data)
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-9
    n2 = a.norm_squared().to_complex()
    assert abs(n2.imag) < 1e-9
    assert abs(n2.real - abs(a.to_complex()) ** 2) < 1e-9


def test_cyclo_sum():
    parts = [Cyclotomic.root_power(3, t) for t in range(8)]
    assert cyclo_sum(parts) == Cyclotomic.zero()
