import cmath
import math

from .._jit import jit

_TWO_OVER_SQRT_PI = 1.1283791670955126
_INV_SQRT_PI = 0.5641895835477563


@jit
def _erf_series(z):
    # erf z = 2/sqrt(pi) e^{-z^2} sum_n 2^n z^{2n+1} / (2n+1)!!
    z2 = z * z
    term = z
    s = z
    n = 0
    while n < 500:
        term = term * 2.0 * z2 / (2.0 * n + 3.0)
        s += term
        n += 1
        if abs(term) <= 1e-17 * abs(s):
            break
    return _TWO_OVER_SQRT_PI * cmath.exp(-z2) * s


@jit
def _erfc_cf(z):
    # erfc z = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), Re z > 0
    tiny = 1e-300
    f = z
    if f == 0:
        f = complex(tiny, 0.0)
    c = f
    d = 0.0j
    n = 1
    while n < 5000:
        an = 0.5 * n
        d = z + an * d
        if d == 0:
            d = complex(tiny, 0.0)
        c = z + an / c
        if c == 0:
            c = complex(tiny, 0.0)
        d = 1.0 / d
        delta = c * d
        f = f * delta
        n += 1
        if abs(delta - 1.0) < 1e-16:
            break
    return _INV_SQRT_PI * cmath.exp(-z * z) / f


@jit
def erfc_kernel(z):
    flip = z.real < 0.0
    w = -z if flip else z
    if abs(w) < 2.0:
        v = 1.0 - _erf_series(w)
    else:
        v = _erfc_cf(w)
    return 2.0 - v if flip else v
