"""Small value types shared across modules."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NonFiniteError, PoleError

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 10000


def as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteError(f"non-finite scalar {z!r}")
    return z


def is_nonpositive_int(z: complex, eps: float = 0.0) -> bool:
    z = complex(z)
    if abs(z.imag) > eps or z.real > eps:
        return False
    return abs(z.real - round(z.real)) <= eps


def near_int(z: complex, eps: float = 1e-12) -> bool:
    z = complex(z)
    return abs(z.imag) <= eps and abs(z.real - round(z.real)) <= eps


def checked(z: complex, what: str = "value") -> complex:
    if not (cmath.isfinite(z)):
        raise NonFiniteError(f"{what} is not finite")
    return complex(z)


@dataclass(frozen=True)
class SeriesResult:
    """A truncated sum (or quadrature) with its error estimate.

    ``converged`` means ``abs_error_estimate <= tol * max(|value|, tiny)``, i.e.
    the tolerance is relative to the computed value.
    """

    value: complex
    abs_error_estimate: float
    terms_used: int
    converged: bool

    @property
    def rel_error_estimate(self) -> float:
        v = abs(self.value)
        return self.abs_error_estimate / v if v > 0 else math.inf


@dataclass(frozen=True)
class TruncatedValue:
    """Partial sum of an asymptotic expansion.

    ``terms_used`` is the highest coefficient index retained, so it never
    exceeds the requested order.
    """

    value: complex
    last_term_modulus: float
    terms_used: int


@dataclass(frozen=True)
class Phi1Params:
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_complex(getattr(self, name)))
        if is_nonpositive_int(self.c):
            raise PoleError(f"c={self.c} is a nonpositive integer")


@dataclass(frozen=True)
class Psi1Params:
    a: complex
    b: complex
    c: complex
    c_prime: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "c_prime"):
            object.__setattr__(self, name, as_complex(getattr(self, name)))
        if is_nonpositive_int(self.c) or is_nonpositive_int(self.c_prime):
            raise PoleError("c and c' must avoid the nonpositive integers")


def converged_flag(value: complex, err: float, tol: float) -> bool:
    return err <= tol * max(abs(value), 1e-300)
