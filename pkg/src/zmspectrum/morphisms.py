"""Endomorphisms of ZM(m,n,r) given by triples (x1, x2, y).

The triple acts by  b^u a^v -> b^(y u) a^(x1 v + x2 [u]_r).

Two enumeration modes are offered. ``paper`` lists every triple with
gcd(x1, m) = 1, 0 <= x1, x2 < m, 0 <= y < n and y = 1 (mod d).
``strict`` additionally requires gcd(y, n) = 1. When gcd(y, n) = g > 1 the
element b^(n/g) is a nontrivial kernel element (d divides n/g, so
[n/g]_r = 0 mod m), hence only strict-mode triples are automorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional

import numpy as np

from . import errors
from .errors import ValidationError
from .modarith import euler_phi, gcd
from .zmgroup import Element, ZmParams, cayley_table, elements, index_of, repunits

Mode = Literal["paper", "strict"]
MODES: tuple[Mode, ...] = ("paper", "strict")

__all__ = [
    "Mode", "MODES", "MorphismTriple", "MorphismCheck", "make_triple", "identity_triple",
    "admissible_ys", "apply", "image_indices", "enumerate_triples", "aut_count_paper",
    "check_morphism", "triple_from_images",
]


class MorphismTriple(NamedTuple):
    x1: int
    x2: int
    y: int

    def __str__(self) -> str:
        return f"f({self.x1},{self.x2},{self.y})"


@dataclass(frozen=True)
class MorphismCheck:
    """Verdict of :func:`check_morphism`.

    ``witness`` is a pair (g, h). If the map is not a homomorphism then
    f(gh) != f(g) f(h); otherwise, if it is not bijective, g != h and
    f(g) == f(h).
    """

    is_homomorphism: bool
    is_bijective: bool
    witness: Optional[tuple[Element, Element]] = None


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise errors.DomainError(f"unknown mode {mode!r}; expected one of {MODES}")


def make_triple(p: ZmParams, x1: int, x2: int, y: int) -> MorphismTriple:
    """Build a triple, raising ValidationError if it violates the paper-mode conditions."""
    if not 0 <= x1 < p.m:
        raise ValidationError(f"x1={x1} not in [0,{p.m})")
    if not 0 <= x2 < p.m:
        raise ValidationError(f"x2={x2} not in [0,{p.m})")
    if gcd(x1, p.m) != 1:
        raise ValidationError(f"gcd(x1,m)={gcd(x1, p.m)} != 1")
    if not 0 <= y < p.n:
        raise ValidationError(f"y={y} not in [0,{p.n})")
    if (y - 1) % p.d:
        raise ValidationError(f"y={y} != 1 (mod d={p.d})")
    return MorphismTriple(x1, x2, y)


def identity_triple(p: ZmParams) -> MorphismTriple:
    return MorphismTriple(1 % p.m, 0, 1 % p.n)


def admissible_ys(p: ZmParams, mode: Mode = "strict") -> list[int]:
    _check_mode(mode)
    ys = [y for y in range(p.n) if (y - 1) % p.d == 0]
    if mode == "strict":
        ys = [y for y in ys if gcd(y, p.n) == 1]
    return ys


def apply(p: ZmParams, f: MorphismTriple, g: Element) -> Element:
    return Element(f.y * g.u % p.n, (f.x1 * g.v + f.x2 * repunits(p)[g.u]) % p.m)


def image_indices(p: ZmParams, f: MorphismTriple) -> np.ndarray:
    """Indices of f(g) for g in elements(p); a vectorized :func:`apply`."""
    idx = np.arange(p.order)
    u, v = idx // p.m, idx % p.m
    reps = np.asarray(repunits(p), dtype=np.int64)
    return (f.y * u % p.n) * p.m + (f.x1 * v + f.x2 * reps[u]) % p.m


def enumerate_triples(p: ZmParams, mode: Mode = "strict") -> list[MorphismTriple]:
    """All triples for ``mode``, ordered lexicographically by (y, x1, x2)."""
    units = [x for x in range(p.m) if gcd(x, p.m) == 1]
    return [
        MorphismTriple(x1, x2, y)
        for y in admissible_ys(p, mode)
        for x1 in units
        for x2 in range(p.m)
    ]


def aut_count_paper(p: ZmParams) -> int:
    """m * phi(m) * n / d."""
    return p.m * euler_phi(p.m) * p.n // p.d


def check_morphism(p: ZmParams, f: MorphismTriple) -> MorphismCheck:
    """Exhaustively test the homomorphism law and injectivity."""
    errors.check_brute_size(p.order)
    table = cayley_table(p)
    img = image_indices(p, f)
    els = elements(p)
    lhs = img[table]                         # f(g h)
    rhs = table[img[:, None], img[None, :]]  # f(g) f(h)
    bad = np.argwhere(lhs != rhs)
    is_hom = bad.size == 0
    witness = None
    if not is_hom:
        i, j = bad[0]
        witness = (els[i], els[j])

    first_seen: dict[int, int] = {}
    collision = None
    for i, target in enumerate(img.tolist()):
        if target in first_seen:
            collision = (els[first_seen[target]], els[i])
            break
        first_seen[target] = i
    is_bij = collision is None
    if witness is None and collision is not None:
        witness = collision
    return MorphismCheck(is_hom, is_bij, witness)


def triple_from_images(p: ZmParams, image_of_a: Element, image_of_b: Element) -> MorphismTriple:
    """Read (x1, x2, y) off the images of the generators a and b.

    Assumes f(a) lies in <a>, which holds for every endomorphism of this shape.
    """
    if image_of_a.u != 0:
        raise errors.DomainError(f"image of a = {image_of_a} is not in <a>")
    return MorphismTriple(image_of_a.v, image_of_b.v, image_of_b.u)
