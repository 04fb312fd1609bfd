"""Exact modular arithmetic on Python integers.

Python ints are arbitrary precision, so nothing here can wrap around.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError

__all__ = ["gcd", "mod_pow", "mult_order", "repunit", "repunit_exact", "euler_phi", "is_prime"]


def _check_nat(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


def gcd(a: int, b: int) -> int:
    """gcd with gcd(a, 0) = a and gcd(0, 0) = 0."""
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    _check_nat("exp", exp)
    return pow(base, exp, modulus)


@lru_cache(maxsize=65536)
def mult_order(r: int, k: int) -> int:
    """Least t >= 1 with r**t == 1 (mod k)."""
    if k < 1:
        raise DomainError(f"modulus must be >= 1, got {k}")
    if math.gcd(r, k) != 1:
        raise DomainError(f"gcd({r},{k}) != 1: multiplicative order undefined")
    if k == 1:
        return 1
    r %= k
    t, x = 1, r
    while x != 1:
        x = x * r % k
        t += 1
    return t


def repunit(u: int, r: int, m: int) -> int:
    """(1 + r + ... + r**(u-1)) mod m, with the empty sum for u = 0."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    _check_nat("u", u)
    acc = 0
    r %= m
    for _ in range(u):
        acc = (acc * r + 1) % m
    return acc


def repunit_exact(u: int, r: int) -> int:
    """The unreduced integer 1 + r + ... + r**(u-1)."""
    _check_nat("u", u)
    return sum(r**i for i in range(u))


def _factorize(m: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    if m < 1:
        raise DomainError(f"euler_phi needs m >= 1, got {m}")
    result = m
    for p in _factorize(m):
        result = result // p * (p - 1)
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factorize(n) == {n: 1}
