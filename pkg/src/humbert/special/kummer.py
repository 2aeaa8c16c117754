"""Kummer U by quadrature of its Laplace-type integral, and erfc."""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import DomainError, NonFiniteError
from ..quadrature import adaptive, semi_infinite
from ..types import as_complex
from . import _gamma_kernels as _g
from ._erfc_kernel import erfc_kernel


def kummer_u(a, b, z, rtol: float = 1e-13) -> complex:
    """U(a,b,z) = 1/Gamma(a) int_0^inf t^{a-1}(1+t)^{b-a-1}e^{-zt} dt, Re(a) > 0.

    The integration ray is rotated to arg t = -arg z, so the integral also
    gives the analytic continuation onto the imaginary axis (|arg z| <= pi/2).
    """
    a, b, z = (as_complex(v) for v in (a, b, z))
    if a.real <= 0:
        raise DomainError("kummer_u needs Re(a) > 0")
    if z == 0 or abs(cmath.phase(z)) > math.pi / 2 + 1e-12:
        raise DomainError("kummer_u needs |arg z| <= pi/2 and z != 0")
    r = abs(z)
    rot = cmath.exp(-1j * cmath.phase(z))
    e = b - a - 1
    p = min(a.real, 1.0)

    # tau = r*t along the ray; int tau^{a-1} (1 + rot*tau/r)^e e^{-tau} dtau
    def head(u):
        # tau = u**(1/p) on [0, 1]
        tau = u ** (1.0 / p)
        return (1.0 / p) * np.exp((a / p - 1.0) * np.log(u)) * (1.0 + rot * tau / r) ** e * np.exp(-tau)

    def tail(tau):
        return np.exp((a - 1.0) * np.log(tau)) * (1.0 + rot * tau / r) ** e * np.exp(-tau)

    h = adaptive(head, 0.0, 1.0, rtol=rtol)
    t = semi_infinite(tail, start=1.0, first=1.0, rtol=rtol)
    integral = h.value + t.value
    val = cmath.exp(a * cmath.log(rot) - a * cmath.log(r)) * integral * complex(_g.rgamma(a))
    if not cmath.isfinite(val):
        raise NonFiniteError("kummer_u overflowed")
    return val


def erfc(z) -> complex:
    """Complementary error function."""
    v = complex(erfc_kernel(as_complex(z)))
    if not cmath.isfinite(v):
        raise NonFiniteError("erfc overflowed")
    return v
