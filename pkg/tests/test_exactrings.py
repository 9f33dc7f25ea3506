from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from landen.exactrings import (
    GF,
    QQ,
    ZZ,
    ConductorMismatch,
    CyclotomicInt,
    CyclotomicRing,
    NotRational,
    cyclotomic_polynomial,
    descend_to_integer,
    euler_phi,
    galois_apply,
    is_prime,
    zeta_pow,
)


@pytest.mark.parametrize("m, expected", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial_small(m, expected):
    assert cyclotomic_polynomial(m) == expected


@pytest.mark.parametrize("m", range(1, 13))
def test_cyclotomic_divides_xm_minus_1(m):
    import sympy as sp

    x = sp.symbols("x")
    phi = sp.Poly(list(reversed(cyclotomic_polynomial(m))), x)
    assert phi == sp.Poly(sp.cyclotomic_poly(m, x), x)
    assert phi.degree() == euler_phi(m)
    assert sp.rem(sp.Poly(x ** m - 1, x), phi).is_zero


def test_zeta_arithmetic():
    z4 = zeta_pow(4, 1)
    assert z4 * z4 == -1
    assert zeta_pow(2, 0) * zeta_pow(2, 1) == -1
    assert zeta_pow(3, 1) + zeta_pow(3, 2) == -1


@pytest.mark.parametrize("m", range(1, 13))
def test_zeta_periodic_and_product(m):
    for t in range(2 * m):
        assert zeta_pow(m, t + m) == zeta_pow(m, t)
    prod = CyclotomicRing(m).one
    for t in range(m):
        prod = prod * zeta_pow(m, t)
    assert prod == (-1) ** (m + 1)


@pytest.mark.parametrize("m", range(1, 13))
def test_orthogonality(m):
    for j in range(-3 * m, 3 * m + 1):
        s = CyclotomicRing(m).zero
        for t in range(m):
            s = s + zeta_pow(m, j * t)
        assert s == (m if j % m == 0 else 0)


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        zeta_pow(3, 1) + zeta_pow(4, 1)


def test_galois():
    x = zeta_pow(4, 1)
    assert galois_apply(x, 1) == x
    assert galois_apply(x, 3) == -x
    assert galois_apply(CyclotomicInt.from_int(4, 5), 3) == 5
    with pytest.raises(ValueError):
        galois_apply(x, 2)


elem = st.lists(st.integers(-20, 20), min_size=4, max_size=4)


@settings(max_examples=60, deadline=None)
@given(elem, elem, st.sampled_from([1, 5, 7, 11]))
def test_galois_is_ring_hom(u, v, j):
    R = CyclotomicRing(12)
    x, y = R(u), R(v)
    assert galois_apply(x + y, j) == galois_apply(x, j) + galois_apply(y, j)
    assert galois_apply(x * y, j) == galois_apply(x, j) * galois_apply(y, j)


@settings(max_examples=60, deadline=None)
@given(elem, elem, elem)
def test_cyclotomic_ring_axioms(u, v, w):
    R = CyclotomicRing(5)
    x, y, z = R(u), R(v), R(w)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_descend():
    assert descend_to_integer(CyclotomicInt.from_int(7, 7)) == 7
    assert descend_to_integer(zeta_pow(3, 1) + zeta_pow(3, 2)) == -1
    with pytest.raises(NotRational):
        descend_to_integer(zeta_pow(4, 1))


def test_rings_and_prime_field():
    assert ZZ(3) == 3 and QQ("1/2") == Fraction(1, 2)
    assert is_prime(13) and not is_prime(1) and not is_prime(91)
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3) / F(3) == F(1)
    assert F(3).inverse() == F(5)
    assert not F(14)
    with pytest.raises(ValueError):
        GF(4)
