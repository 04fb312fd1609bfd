"""Reidemeister numbers of ZM(m,n,r), computed several independent ways.

``reidemeister_orbits``
    counts orbits of the twisted action g . x = g x f(g)^-1 by connected
    components over every (g, x) edge.
``reidemeister_burnside``
    averages |Fix(g)| = #{x : f(g) = x^-1 g x} over the group.
``reidemeister_formula``
    the closed-form double sum, depending on y only.
``reidemeister_number``
    the same sum with the alpha-count corrected for x1: the congruence
    r^alpha = x1 (mod k) has n / o_k(r) solutions in [0, n) when x1 mod k is
    a power of r, and none otherwise. ``reidemeister_formula`` always uses
    the first case, so the two disagree exactly when some x1 mod k falls
    outside <r mod k>.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import errors
from .errors import ConsistencyError, DomainError, IntegralityError
from .modarith import gcd, is_prime, mult_order
from .morphisms import (
    Mode, MorphismTriple, admissible_ys, check_morphism, enumerate_triples, image_indices,
)
from .zmgroup import (
    Element, ZmParams, cayley_table, elements, index_of, inverse_table, repunits,
)

__all__ = [
    "ReidemeisterReport", "SpectrumResult", "ExactSpectrum",
    "twisted_action", "twisted_classes", "reidemeister_orbits", "fix_count",
    "fix_counts", "reidemeister_burnside", "formula_total", "reidemeister_formula",
    "reidemeister_number", "spectrum", "exact_spectrum", "corollary_prime_n",
    "dihedral_spectrum", "report",
]


@dataclass(frozen=True)
class ReidemeisterReport:
    """Per-morphism record. Oracle fields are None when skipped for size."""

    triple: MorphismTriple
    r_formula: int
    r_orbit: Optional[int]
    r_burnside: Optional[int]
    r_exact: int
    bijective: Optional[bool] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.r_orbit is None or self.r_burnside is None:
            return None
        return self.r_orbit == self.r_burnside == self.r_formula


@dataclass(frozen=True)
class SpectrumResult:
    params: ZmParams
    mode: Mode
    per_y: list[tuple[int, int]]
    spectrum: list[int] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "spectrum", sorted({value for _, value in self.per_y}))


@dataclass(frozen=True)
class ExactSpectrum:
    """Spectrum over every (y, x1) class; x2 never changes R."""

    params: ZmParams
    mode: Mode
    per_class: list[tuple[int, int, int]]  # (y, x1, R)
    spectrum: list[int] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "spectrum", sorted({value for *_, value in self.per_class}))


# ---------------------------------------------------------------- brute force

def twisted_action(p: ZmParams, f: MorphismTriple) -> np.ndarray:
    """A[g, x] = index of g x f(g)^-1."""
    table = cayley_table(p)
    f_inv = inverse_table(p)[image_indices(p, f)]
    return table[table, f_inv[:, None]]


def _orbit_labels(p: ZmParams, f: MorphismTriple) -> tuple[int, np.ndarray]:
    # row x of the graph lists every g . x
    targets = twisted_action(p, f).T.ravel()
    size = p.order
    indptr = np.arange(0, size * size + 1, size)
    graph = csr_matrix((np.ones(targets.size), targets, indptr), shape=(size, size))
    return connected_components(graph, directed=True, connection="weak")


def twisted_classes(p: ZmParams, f: MorphismTriple) -> list[list[Element]]:
    """Twisted conjugacy classes, each sorted, ordered by least element."""
    errors.check_brute_size(p.order)
    _, labels = _orbit_labels(p, f)
    els = elements(p)
    classes: dict[int, list[Element]] = {}
    for i, label in enumerate(labels.tolist()):
        classes.setdefault(label, []).append(els[i])
    return sorted(classes.values())


def reidemeister_orbits(p: ZmParams, f: MorphismTriple) -> int:
    errors.check_brute_size(p.order)
    count, _ = _orbit_labels(p, f)
    return int(count)


@lru_cache(maxsize=32)
def _conjugation_table(p: ZmParams) -> np.ndarray:
    # C[x, g] = x^-1 g x
    table = cayley_table(p)
    inv = inverse_table(p)
    conj = table[table[inv[:, None], np.arange(p.order)[None, :]], np.arange(p.order)[:, None]]
    conj.setflags(write=False)
    return conj


def fix_counts(p: ZmParams, f: MorphismTriple) -> np.ndarray:
    """|Fix(g)| for every g, in element order."""
    errors.check_brute_size(p.order)
    conj = _conjugation_table(p)
    return (conj == image_indices(p, f)[None, :]).sum(axis=0)


def fix_count(p: ZmParams, f: MorphismTriple, g: Element) -> int:
    """#{x : f(g) = x^-1 g x}."""
    return int(fix_counts(p, f)[index_of(p, g)])


def reidemeister_burnside(p: ZmParams, f: MorphismTriple) -> int:
    total = int(fix_counts(p, f).sum())
    if total % p.order:
        raise ConsistencyError(f"Burnside sum {total} not divisible by |G|={p.order} for {f} on {p}")
    return total // p.order


# ---------------------------------------------------------------- closed forms

def _check_y(p: ZmParams, y: int) -> None:
    if not 0 <= y < p.n or (y - 1) % p.d:
        raise DomainError(f"y={y} must satisfy 0 <= y < {p.n} and y = 1 (mod {p.d})")


def _admissible_us(p: ZmParams, y: int) -> range:
    # n / gcd(n, y-1) divides u; gcd(n, 0) = n covers y = 1
    return range(0, p.n, p.n // gcd(p.n, abs(y - 1)))


@lru_cache(maxsize=65536)
def _powers(r: int, k: int) -> frozenset[int]:
    return frozenset(pow(r, a, k) for a in range(mult_order(r, k)))


def _total(p: ZmParams, y: int, x1: Optional[int]) -> int:
    reps = repunits(p)
    total = 0
    for u in _admissible_us(p, y):
        g = gcd(p.m, reps[u])
        for v in range(p.m):
            k = g // gcd(g, v)
            if x1 is not None and x1 % k not in _powers(p.r, k):
                continue
            total += g * (p.n // mult_order(p.r, k))
    return total


def formula_total(p: ZmParams, y: int) -> int:
    """The integer T with R = T / (m n), before the final division."""
    _check_y(p, y)
    return _total(p, y, None)


def reidemeister_formula(p: ZmParams, y: int) -> int:
    total = formula_total(p, y)
    if total % p.order:
        raise IntegralityError(f"closed form total {total} not divisible by m*n={p.order} at y={y} on {p}")
    return total // p.order


def reidemeister_number(p: ZmParams, f: MorphismTriple) -> int:
    """Closed form with the x1-dependent alpha count."""
    _check_y(p, f.y)
    total = _total(p, f.y, f.x1)
    if total % p.order:
        raise IntegralityError(f"corrected total {total} not divisible by m*n={p.order} for {f} on {p}")
    return total // p.order


def spectrum(p: ZmParams, mode: Mode = "strict") -> SpectrumResult:
    per_y = [(y, reidemeister_formula(p, y)) for y in admissible_ys(p, mode)]
    return SpectrumResult(p, mode, per_y)


def exact_spectrum(p: ZmParams, mode: Mode = "strict") -> ExactSpectrum:
    units = [x for x in range(p.m) if gcd(x, p.m) == 1]
    per_class = [
        (y, x1, reidemeister_number(p, MorphismTriple(x1, 0, y)))
        for y in admissible_ys(p, mode)
        for x1 in units
    ]
    return ExactSpectrum(p, mode, per_class)


def corollary_prime_n(p: ZmParams) -> int:
    """n - 1 + S/n with S the sum of gcd(m, [u]_r) over u < n."""
    if not is_prime(p.n):
        raise DomainError(f"n={p.n} is not prime")
    s = sum(gcd(p.m, rep) for rep in repunits(p))
    if s % p.n:
        raise IntegralityError(f"S={s} not divisible by n={p.n} on {p}")
    return p.n - 1 + s // p.n


def dihedral_spectrum(m: int) -> int:
    """(m + 3) / 2, the claimed single Reidemeister number of D_2m for odd m."""
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m={m} must be odd and >= 3")
    return (m + 3) // 2


def report(p: ZmParams, f: MorphismTriple, brute: bool = True) -> ReidemeisterReport:
    """All Reidemeister values for one triple; oracles skipped when ``brute`` is false."""
    r_formula = reidemeister_formula(p, f.y)
    r_exact = reidemeister_number(p, f)
    if not brute:
        return ReidemeisterReport(f, r_formula, None, None, r_exact)
    return ReidemeisterReport(
        f, r_formula,
        reidemeister_orbits(p, f),
        reidemeister_burnside(p, f),
        r_exact,
        check_morphism(p, f).is_bijective,
    )
