"""Gamma-family functions of a complex argument."""
from __future__ import annotations

import cmath

from ..errors import NonFiniteError, PoleError
from ..types import as_complex
from . import _gamma_kernels as _k

EULER_GAMMA = _k.EULER_GAMMA


def _finite(v: complex, what: str) -> complex:
    v = complex(v)
    if v != v or abs(v) == float("inf"):
        raise NonFiniteError(f"{what} overflowed")
    return v


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z)."""
    z = as_complex(z)
    if _k.is_pole(z):
        raise PoleError(f"log_gamma pole at z={z}")
    return complex(_k.lngamma(z))


def gamma(z) -> complex:
    z = as_complex(z)
    if _k.is_pole(z):
        raise PoleError(f"gamma pole at z={z}")
    return _finite(_k.gamma(z), "gamma")


def rgamma(z) -> complex:
    """Reciprocal gamma 1/Gamma(z); zero at the poles."""
    return _finite(_k.rgamma(as_complex(z)), "rgamma")


def digamma(z) -> complex:
    z = as_complex(z)
    if _k.is_pole(z):
        raise PoleError(f"digamma pole at z={z}")
    return complex(_k.digamma(z))


def pochhammer(z, n: int) -> complex:
    """Rising factorial (z)_n = z(z+1)...(z+n-1)."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0; use pochhammer_signed")
    return _finite(_k.poch(as_complex(z), int(n)), "pochhammer")


def pochhammer_signed(z, n: int) -> complex:
    """(z)_n for any integer n, using (z)_{-j} = 1/(z-j)_j for negative n."""
    z = as_complex(z)
    if n < 0 and _k.poch(z + n, -n) == 0:
        raise PoleError(f"({z})_{n} has a vanishing denominator")
    return _finite(_k.poch_signed(z, int(n)), "pochhammer")


def gamma_ratio(num, den) -> complex:
    """prod Gamma(num) / prod Gamma(den); a pole in ``den`` gives zero."""
    num = [as_complex(v) for v in num]
    den = [as_complex(v) for v in den]
    if any(_k.is_pole(v) for v in den):
        return 0j
    for v in num:
        if _k.is_pole(v):
            raise PoleError(f"gamma pole at {v} in numerator")
    acc = 0j
    for v in num:
        acc += _k.lngamma(v)
    for v in den:
        acc -= _k.lngamma(v)
    return _finite(cmath.exp(acc), "gamma ratio")


def cpow(z, p) -> complex:
    """Principal branch power z**p."""
    return complex(_k.cpow(as_complex(z), as_complex(p)))
