"""The metacyclic group ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>.

Elements are stored in normal form b^u a^v as the pair (u, v) with
0 <= u < n and 0 <= v < m. Since a b^k = b^k a^(r^k), the product is

    (b^u1 a^v1)(b^u2 a^v2) = b^(u1+u2) a^(v1 r^u2 + v2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import errors
from .errors import ValidationError, SizeError
from .modarith import gcd, mod_pow, mult_order, repunit

__all__ = [
    "ZmParams", "Element", "validate", "identity", "multiply", "inverse", "power",
    "elements", "index_of", "conjugacy_classes", "center", "repunits", "cayley_table",
    "inverse_table",
]


@dataclass(frozen=True)
class ZmParams:
    m: int
    n: int
    r: int
    d: int = field(compare=False)

    @property
    def order(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"ZM({self.m},{self.n},{self.r})"


class Element(NamedTuple):
    """b^u a^v. Tuple ordering is the global (u, v) lexicographic order."""

    u: int
    v: int

    def __str__(self) -> str:
        parts = []
        if self.u:
            parts.append("b" if self.u == 1 else f"b^{self.u}")
        if self.v:
            parts.append("a" if self.v == 1 else f"a^{self.v}")
        return "".join(parts) or "1"


def validate(m: int, n: int, r: int) -> ZmParams:
    """Check admissibility of (m, n, r) and return the normalized parameters.

    Raises ValidationError naming the first failed condition, or SizeError
    when m*n exceeds the configured bound.
    """
    if m < 1:
        raise ValidationError(f"m={m} must be >= 1")
    if n < 1:
        raise ValidationError(f"n={n} must be >= 1")
    if r < 0:
        raise ValidationError(f"r={r} must be >= 0")
    if m * n > errors.max_order():
        raise SizeError(f"m*n={m * n} exceeds size bound {errors.max_order()} (set {errors.MAX_ORDER_ENV})")
    g = gcd(m, n)
    if g != 1:
        raise ValidationError(f"gcd(m,n)={g} != 1")
    g = gcd(m, abs(r - 1))
    if g != 1:
        raise ValidationError(f"gcd(m,r-1)={g} != 1")
    if mod_pow(r, n, m) != 1 % m:
        raise ValidationError(f"r^n = {mod_pow(r, n, m)} != 1 (mod m)")
    r %= m
    d = mult_order(r, m)
    if n % d:
        raise errors.ConsistencyError(f"order {d} of r does not divide n={n}")
    return ZmParams(m, n, r, d)


def identity(p: ZmParams) -> Element:
    return Element(0, 0)


def multiply(p: ZmParams, g: Element, h: Element) -> Element:
    return Element((g.u + h.u) % p.n, (g.v * pow(p.r, h.u, p.m) + h.v) % p.m)


def inverse(p: ZmParams, g: Element) -> Element:
    u = (p.n - g.u) % p.n
    return Element(u, (p.m - g.v * pow(p.r, u, p.m) % p.m) % p.m)


def power(p: ZmParams, g: Element, k: int) -> Element:
    result = identity(p)
    for _ in range(k % p.order if p.order else 0):
        result = multiply(p, result, g)
    return result


def elements(p: ZmParams) -> list[Element]:
    return [Element(u, v) for u in range(p.n) for v in range(p.m)]


def index_of(p: ZmParams, g: Element) -> int:
    """Position of g in :func:`elements`."""
    return g.u * p.m + g.v


@lru_cache(maxsize=256)
def repunits(p: ZmParams) -> tuple[int, ...]:
    """[u]_r mod m for u in range(n)."""
    out, acc = [], 0
    for _ in range(p.n):
        out.append(acc)
        acc = (acc * p.r + 1) % p.m
    return tuple(out)


@lru_cache(maxsize=32)
def _cayley_table(p: ZmParams) -> np.ndarray:
    els = elements(p)
    table = np.empty((p.order, p.order), dtype=np.int64)
    for i, g in enumerate(els):
        table[i] = [index_of(p, multiply(p, g, h)) for h in els]
    table.setflags(write=False)
    return table


def cayley_table(p: ZmParams) -> np.ndarray:
    """Read-only table T with T[i, j] = index of elements[i] * elements[j].

    Built by calling :func:`multiply` on every pair; subject to the
    brute-force size limit.
    """
    errors.check_brute_size(p.order)
    return _cayley_table(p)


def inverse_table(p: ZmParams) -> np.ndarray:
    return np.array([index_of(p, inverse(p, g)) for g in elements(p)], dtype=np.int64)


def conjugacy_classes(p: ZmParams) -> list[list[Element]]:
    """Ordinary conjugacy classes by exhaustive conjugation x -> g^-1 x g."""
    errors.check_brute_size(p.order)
    els = elements(p)
    seen: set[Element] = set()
    classes = []
    for x in els:
        if x in seen:
            continue
        cls = sorted({multiply(p, multiply(p, inverse(p, g), x), g) for g in els})
        seen.update(cls)
        classes.append(cls)
    return classes


def center(p: ZmParams) -> list[Element]:
    errors.check_brute_size(p.order)
    table = cayley_table(p)
    central = np.all(table == table.T, axis=1)
    els = elements(p)
    return [els[i] for i in np.flatnonzero(central)]
