"""Exception hierarchy and the global size bound."""
from __future__ import annotations

import os

DEFAULT_MAX_ORDER = 2**20
DEFAULT_BRUTE_LIMIT = 2048
MAX_ORDER_ENV = "ZMSPECTRUM_MAX_ORDER"
BRUTE_LIMIT_ENV = "ZMSPECTRUM_BRUTE_LIMIT"


class ZmError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZmError, ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(DomainError):
    """A parameter triple (or morphism triple) is not admissible.

    ``condition`` names the violated condition, e.g. ``"gcd(m,n)=2"``.
    """

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


class SizeError(ZmError):
    """A group is larger than the configured bound."""


class IntegralityError(ZmError, ArithmeticError):
    """A closed-form sum failed to divide evenly."""


class ConsistencyError(ZmError, AssertionError):
    """An internal cross-check failed. Always indicates a bug."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return value


def max_order() -> int:
    """Largest m*n accepted by :func:`zmspectrum.zmgroup.validate`."""
    return _env_int(MAX_ORDER_ENV, DEFAULT_MAX_ORDER)


def brute_limit() -> int:
    """Largest m*n for which the O((mn)^2) brute-force routines will run."""
    return _env_int(BRUTE_LIMIT_ENV, DEFAULT_BRUTE_LIMIT)


def check_brute_size(order: int) -> None:
    limit = brute_limit()
    if order > limit:
        raise SizeError(f"group order {order} exceeds brute-force limit {limit} (set {BRUTE_LIMIT_ENV})")
