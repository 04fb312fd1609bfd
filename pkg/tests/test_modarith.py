import math
import random

import pytest
from hypothesis import given, strategies as st

from zmspectrum.errors import DomainError
from zmspectrum.modarith import euler_phi, gcd, is_prime, mod_pow, mult_order, repunit, repunit_exact


@pytest.mark.parametrize("a, b, expected", [(4, 2, 2), (4, 0, 4), (3, 7, 1), (0, 0, 0)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_gcd_symmetric_and_divides(a, b):
    g = gcd(a, b)
    assert g == gcd(b, a)
    if g:
        assert a % g == 0 and b % g == 0


@pytest.mark.parametrize("base, exp, modulus, expected", [(2, 4, 5, 1), (2, 0, 3, 1), (7, 3, 1, 0)])
def test_mod_pow_examples(base, exp, modulus, expected):
    assert mod_pow(base, exp, modulus) == expected


def test_mod_pow_zero_modulus():
    with pytest.raises(DomainError):
        mod_pow(2, 3, 0)


@pytest.mark.parametrize("r, k, expected", [(2, 3, 2), (5, 1, 1), (2, 7, 3)])
def test_mult_order_examples(r, k, expected):
    assert mult_order(r, k) == expected


def test_mult_order_errors():
    with pytest.raises(DomainError):
        mult_order(2, 4)
    with pytest.raises(DomainError):
        mult_order(3, 0)


def test_mult_order_exhaustive_minimality_and_divisibility():
    for k in range(1, 201):
        for r in range(k):
            if math.gcd(r, k) != 1:
                continue
            t = mult_order(r, k)
            assert pow(r, t, k) == 1 % k
            assert all(pow(r, s, k) != 1 % k for s in range(1, t))
            for s in range(1, 2 * t + 3):
                if pow(r, s, k) == 1 % k:
                    assert s % t == 0


@pytest.mark.parametrize("u, r, m, expected", [(0, 2, 3, 0), (3, 2, 3, 1), (2, 4, 5, 0)])
def test_repunit_examples(u, r, m, expected):
    assert repunit(u, r, m) == expected
    assert repunit_exact(u, r) % m == expected


def test_repunit_recurrence_randomized():
    rng = random.Random(20261016)
    for _ in range(40):
        r, m = rng.randrange(0, 50), rng.randrange(1, 500)
        for u in range(400):
            assert repunit(u + 1, r, m) == (repunit(u, r, m) * r + 1) % m


def test_repunit_gcd_stability():
    for u in range(31):
        for r in range(11):
            exact = repunit_exact(u, r)
            for m in range(1, 40):
                assert gcd(m, exact) == gcd(m, repunit(u, r, m))


def test_repunit_zero_modulus():
    with pytest.raises(DomainError):
        repunit(3, 2, 0)


@pytest.mark.parametrize("m, expected", [(1, 1), (3, 2), (12, 4)])
def test_euler_phi_examples(m, expected):
    assert euler_phi(m) == expected


def test_euler_phi_against_count():
    for m in range(1, 400):
        assert euler_phi(m) == sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
    with pytest.raises(DomainError):
        euler_phi(0)


def test_is_prime():
    assert [k for k in range(30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
