"""Scalar gamma-family kernels (numba-compatible)."""
import cmath
import math

import numpy as np

from .._jit import jit

EULER_GAMMA = 0.57721566490153286061
LOG_SQRT_2PI = 0.91893853320467274178

_LANCZOS = np.array([
    57.1562356658629235, -59.5979603554754912,
    14.1360979747417471, -0.491913816097620199,
    .339946499848118887e-4, .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
])

# B_{2k} / (2k) for the digamma asymptotic series
_PSI_ASYM = np.array([
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0,
    -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0,
])


@jit
def is_pole(z):
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


@jit
def _lngamma_lanczos(z):
    # valid for Re(z) >= 0.5
    tmp = z + 5.2421875
    tmp = (z + 0.5) * cmath.log(tmp) - tmp
    ser = 0.999999999999997092 + 0.0j
    y = z
    for j in range(_LANCZOS.shape[0]):
        y = y + 1.0
        ser = ser + _LANCZOS[j] / y
    return tmp + cmath.log(2.5066282746310005 * ser) - cmath.log(z)


@jit
def _lngamma_stirling(z):
    # valid for |z| >= 15, Re(z) > 0
    w = 1.0 / z
    w2 = w * w
    s = (((((-691.0 / 360360.0 * w2 + 1.0 / 1188.0) * w2 - 1.0 / 1680.0) * w2
           + 1.0 / 1260.0) * w2 - 1.0 / 360.0) * w2 + 1.0 / 12.0) * w
    return (z - 0.5) * cmath.log(z) - z + LOG_SQRT_2PI + s


@jit
def lngamma(z):
    """Principal branch of log Gamma; NaN at poles."""
    if is_pole(z):
        return complex(math.nan, math.nan)
    if z.real >= 0.5:
        if abs(z) >= 15.0:
            return _lngamma_stirling(z)
        return _lngamma_lanczos(z)
    # upward recurrence keeps the principal branch: lnG(z) = lnG(z+m) - sum log(z+k)
    m = int(math.ceil(0.5 - z.real))
    acc = 0.0j
    for k in range(m):
        acc += cmath.log(z + k)
    w = z + m
    if abs(w) >= 15.0:
        return _lngamma_stirling(w) - acc
    return _lngamma_lanczos(w) - acc


@jit
def sinpi(z):
    """sin(pi z) with argument reduction about the nearest integer."""
    n = math.floor(z.real + 0.5)
    r = z - n
    s = cmath.sin(math.pi * r)
    if int(n) % 2 != 0:
        s = -s
    return s


@jit
def gamma(z):
    if is_pole(z):
        return complex(math.inf, 0.0)
    if z.real >= 0.5:
        return cmath.exp(lngamma(z))
    return math.pi / (sinpi(z) * cmath.exp(lngamma(1.0 - z)))


@jit
def rgamma(z):
    """1/Gamma(z), entire; exactly zero at the poles of Gamma."""
    if is_pole(z):
        return 0.0j
    if z.real >= 0.5:
        return cmath.exp(-lngamma(z))
    return sinpi(z) * cmath.exp(lngamma(1.0 - z)) / math.pi


@jit
def cotpi(z):
    n = math.floor(z.real + 0.5)
    r = z - n
    return cmath.cos(math.pi * r) / cmath.sin(math.pi * r)


@jit
def digamma(z):
    if is_pole(z):
        return complex(math.nan, math.nan)
    acc = 0.0j
    if z.real < 0.5:
        acc = -math.pi * cotpi(z)
        z = 1.0 - z
    while abs(z) < 15.0:
        acc -= 1.0 / z
        z = z + 1.0
    w2 = 1.0 / (z * z)
    s = 0.0j
    p = w2
    for k in range(_PSI_ASYM.shape[0]):
        s += _PSI_ASYM[k] * p
        p *= w2
    return acc + cmath.log(z) - 0.5 / z - s


@jit
def poch(z, n):
    """Rising factorial z(z+1)...(z+n-1) for integer n >= 0."""
    p = 1.0 + 0.0j
    for k in range(n):
        p *= z + k
    return p


@jit
def poch_signed(z, n):
    """(z)_n for any integer n, with (z)_{-j} = 1/(z-j)_j; inf on a pole."""
    if n >= 0:
        return poch(z, n)
    d = poch(z + n, -n)
    if d == 0:
        return complex(math.inf, 0.0)
    return 1.0 / d


@jit
def cpow(z, p):
    """Principal power z**p."""
    if z == 0:
        if p == 0:
            return 1.0 + 0.0j
        if p.real > 0:
            return 0.0j
        return complex(math.inf, 0.0)
    return cmath.exp(p * cmath.log(z))


@jit
def gamma_ratio(n1, n2, d1, d2):
    """Gamma(n1)Gamma(n2)/(Gamma(d1)Gamma(d2)); zero if a denominator is a pole.

    Numerator poles yield inf (callers treat that as a degenerate case).
    """
    if is_pole(d1) or is_pole(d2):
        return 0.0j
    if is_pole(n1) or is_pole(n2):
        return complex(math.inf, 0.0)
    small = abs(n1) < 20 and abs(n2) < 20 and abs(d1) < 20 and abs(d2) < 20
    if small:
        return gamma(n1) * gamma(n2) * rgamma(d1) * rgamma(d2)
    return cmath.exp(lngamma(n1) + lngamma(n2) - lngamma(d1) - lngamma(d2))
