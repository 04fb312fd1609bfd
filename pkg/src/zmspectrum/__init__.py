"""Reidemeister numbers and spectra of the metacyclic ZM-groups ZM(m,n,r)."""
from .errors import (
    ConsistencyError, DomainError, IntegralityError, SizeError, ValidationError, ZmError,
)
from .modarith import euler_phi, gcd, mod_pow, mult_order, repunit
from .morphisms import MorphismCheck, MorphismTriple, apply, check_morphism, enumerate_triples, make_triple
from .reidemeister import (
    ReidemeisterReport, SpectrumResult, corollary_prime_n, dihedral_spectrum, exact_spectrum,
    fix_count, reidemeister_burnside, reidemeister_formula, reidemeister_number,
    reidemeister_orbits, spectrum,
)
from .zmgroup import Element, ZmParams, center, conjugacy_classes, elements, inverse, multiply, validate

__version__ = "0.1.0"
