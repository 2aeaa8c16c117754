"""Convergent representations of Phi_1 and Psi_1, with exact transformations.

Everything here is an oracle: the asymptotic module is tested against it.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from . import _series_kernels as _sk
from .errors import DomainError, NonFiniteError, PoleError
from .quadrature import adaptive
from .special import _hyper_kernels as _hk
from .special.gamma import cpow, gamma_ratio, pochhammer
from .special.hyper import hyp1f1, hyp1f1_regularized, hyp2f1, pfq
from .special import _gamma_kernels as _g
from .types import (
    DEFAULT_MAX_TERMS, DEFAULT_TOL, Phi1Params, Psi1Params, SeriesResult,
    as_complex, converged_flag, is_nonpositive_int, near_int,
)

INNER_TOL = 1e-15


def on_cut(x: complex) -> bool:
    return x.imag == 0 and x.real >= 1


def _check_region(x: complex):
    if on_cut(x):
        raise DomainError(f"x={x} lies on the cut [1, inf)")


def _series(v, e, n, st, tol, what) -> SeriesResult:
    if st == _hk.POLE:
        raise PoleError(f"{what}: parameter pole")
    if st == _hk.CUT:
        raise DomainError(f"{what}: argument on the cut")
    v = complex(v)
    e = float(e)
    if not cmath.isfinite(v):
        raise NonFiniteError(f"{what}: series overflowed")
    return SeriesResult(v, e, max(int(n), 1), st == _hk.OK and converged_flag(v, e, tol))


def phi1_taylor(p: Phi1Params, x, y, tol: float = DEFAULT_TOL,
                max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Defining double series of Phi_1, summed along diagonals m+n=k."""
    x, y = as_complex(x), as_complex(y)
    if abs(x) >= 1:
        raise DomainError("phi1_taylor needs |x| < 1")
    v, e, n, st = _sk.diagonal_kernel(p.a, p.b, p.c, 1.0 + 0j, x, y, False, tol, max_terms)
    return _series(v, e, n, st, tol, "phi1_taylor")


def psi1_series(q: Psi1Params, x, y, tol: float = DEFAULT_TOL,
                max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Defining double series of Psi_1, summed along diagonals.

    Falls back to the outer series of Gauss functions when the diagonal sum
    loses accuracy to cancellation.
    """
    x, y = as_complex(x), as_complex(y)
    if abs(x) >= 1:
        raise DomainError("psi1_series needs |x| < 1")
    v, e, n, st = _sk.diagonal_kernel(q.a, q.b, q.c, q.c_prime, x, y, True, tol, max_terms)
    if st == _hk.OK and e <= tol * max(abs(v), 1.0):
        return _series(v, e, n, st, tol, "psi1_series")
    # diagonals cancel badly for |x| near 1 with large y; sum over n of 2F1 instead
    v2, e2, n2, st2 = _sk.outer_2f1_kernel(q.a, q.b, q.c, q.c_prime, x, y, True, tol,
                                           max_terms, INNER_TOL)
    if not math.isfinite(e) or e2 < e:
        v, e, n, st = v2, e2, n2, st2
    return _series(v, e, n, st, tol, "psi1_series")


def kummer_transform(p: Phi1Params, x, y):
    """Parameters, arguments and prefactor of the Kummer-type transformation.

    Phi_1[a,b;c;x,y] = e^y (1-x)^{-b} Phi_1[c-a,b;c; x/(x-1), -y].
    """
    x, y = as_complex(x), as_complex(y)
    if x == 1:
        raise DomainError("kummer_transform undefined at x=1")
    pref = cmath.exp(y) * cpow(1 - x, -p.b)
    return Phi1Params(p.c - p.a, p.b, p.c), x / (x - 1), -y, pref


def phi1_to_psi1(p: Phi1Params, x, y):
    """Map Phi_1 onto Psi_1[c-b, c-a; c, c-b; x, (x-1)y/x] with its prefactor."""
    x, y = as_complex(x), as_complex(y)
    if x == 0 or x == 1:
        raise DomainError("phi1_to_psi1 needs x not in {0, 1}")
    a, b, c = p.a, p.b, p.c
    pref = cpow(1 - x, c - a - b) * cmath.exp(y / x)
    return Psi1Params(c - b, c - a, c, c - b), x, (x - 1) * y / x, pref


def phi1_series_2f1(p: Phi1Params, x, y, tol: float = DEFAULT_TOL,
                    max_terms: int = DEFAULT_MAX_TERMS,
                    kummer: bool | None = None) -> SeriesResult:
    """Single series of 2F1 functions continuing Phi_1 to the cut plane in x.

    With ``kummer=None`` the Kummer-type transformation is applied when
    Re(y) < 0 so that the outer series has no sign cancellation for real y.
    """
    x, y = as_complex(x), as_complex(y)
    _check_region(x)
    if kummer is None:
        kummer = y.real < 0
    pref = 1.0 + 0j
    if kummer:
        p, x, y, pref = kummer_transform(p, x, y)
    v, e, n, st = _sk.phi1_2f1_kernel(p.a, p.b, p.c, x, y, tol, max_terms, INNER_TOL)
    r = _series(v, e, n, st, tol, "phi1_series_2f1")
    if pref == 1:
        return r
    val = pref * r.value
    err = abs(pref) * r.abs_error_estimate
    return SeriesResult(val, err, r.terms_used, r.converged and converged_flag(val, err, tol))


def phi1_euler_integral(p: Phi1Params, x, y, rtol: float = 1e-12) -> SeriesResult:
    """Euler-type integral over [0, 1], valid for Re(c) > Re(a) > 0.

    Endpoint singularities are removed by t = u^{1/Re(a)} near 0 and the mirror
    substitution near 1 (only when the exponent is below one).
    """
    x, y = as_complex(x), as_complex(y)
    a, b, c = p.a, p.b, p.c
    if not (c.real > a.real > 0):
        raise DomainError("phi1_euler_integral needs Re(c) > Re(a) > 0")
    _check_region(x)
    ca = c - a
    pa = min(a.real, 1.0)
    pc = min(ca.real, 1.0)

    def body(t):
        return np.exp(-b * np.log(1 - x * t) + y * t)

    def left(u):
        # t = u^{1/pa}/2 on [0, 1/2]
        t = 0.5 * u ** (1.0 / pa)
        w = np.exp((a / pa - 1.0) * np.log(u) + (ca - 1.0) * np.log1p(-t))
        return w * body(t)

    def right(v):
        # 1 - t = v^{1/pc}/2 on [1/2, 1]
        s = 0.5 * v ** (1.0 / pc)
        t = 1.0 - s
        w = np.exp((ca / pc - 1.0) * np.log(v) + (a - 1.0) * np.log(t))
        return w * body(t)

    r1 = adaptive(left, 0.0, 1.0, rtol=rtol)
    r2 = adaptive(right, 0.0, 1.0, rtol=rtol)
    f1 = cmath.exp(-a * math.log(2.0)) / pa
    f2 = cmath.exp(-ca * math.log(2.0)) / pc
    pref = gamma_ratio([c], [a, ca])
    val = pref * (f1 * r1.value + f2 * r2.value)
    err = abs(pref) * (abs(f1) * r1.abs_error_estimate + abs(f2) * r2.abs_error_estimate)
    ok = r1.converged and r2.converged
    return SeriesResult(val, err, r1.terms_used + r2.terms_used, ok)


def phi1_near_x1_connection(p: Phi1Params, x, y, tol: float = DEFAULT_TOL,
                            max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Two Psi_1 series in 1-x; needs a+b-c not an integer and |1-x| < 1."""
    x = as_complex(x)
    if abs(1 - x) >= 1:
        raise DomainError("connection formula is summed only for |1-x| < 1")
    _check_region(x)
    return phi1_connection_in_w(p, 1 - x, y, tol, max_terms)


def phi1_connection_in_w(p: Phi1Params, w, y, tol: float = DEFAULT_TOL,
                         max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Same connection sum, taking w = 1-x directly so tiny w keeps its digits."""
    w, y = as_complex(w), as_complex(y)
    a, b, c = p.a, p.b, p.c
    if near_int(a + b - c, 1e-12):
        raise DomainError("connection formula needs a+b-c not an integer; "
                          "use phi1_x_to_1_log when a+b=c")
    if abs(w) >= 1 or w == 0:
        raise DomainError("connection formula needs 0 < |1-x| < 1")
    if w.imag == 0 and w.real < 0:
        raise DomainError("1-x must not be a negative real (x on the cut)")
    if is_nonpositive_int(c - b):
        raise PoleError("connection formula needs c-b not a nonpositive integer")
    A1 = gamma_ratio([c, c - a - b], [c - a, c - b])
    A2 = gamma_ratio([c, a + b - c], [a, b]) * cpow(w, c - a - b)
    parts = []
    if A1 != 0:
        parts.append((A1, psi1_series(Psi1Params(a, b, a + b - c + 1, c - b), w, y, tol, max_terms)))
    if A2 != 0:
        parts.append((A2, psi1_series(Psi1Params(c - b, c - a, c - a - b + 1, c - b), w, y, tol, max_terms)))
    val = sum((A * r.value for A, r in parts), 0j)
    err = sum(abs(A) * r.abs_error_estimate for A, r in parts)
    err += 4e-16 * sum(abs(A * r.value) for A, r in parts)
    n = sum(r.terms_used for _, r in parts)
    ok = all(r.converged for _, r in parts)
    return SeriesResult(val, err, max(n, 1), ok and converged_flag(val, err, tol))


def phi1_at_one(p: Phi1Params, y, tol: float = DEFAULT_TOL) -> SeriesResult:
    """Value at x=1: Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)) 1F1(a; c-b; y)."""
    y = as_complex(y)
    a, b, c = p.a, p.b, p.c
    if (c - a - b).real <= 0:
        raise DomainError("phi1_at_one needs Re(c-a-b) > 0")
    pref = gamma_ratio([c, c - a - b], [c - a])
    if is_nonpositive_int(c - b):
        val = pref * hyp1f1_regularized(a, c - b, y)
        return SeriesResult(val, 1e-15 * abs(val), 1, True)
    r = hyp1f1(a, c - b, y, tol=min(tol, 1e-15))
    pref = pref * complex(_g.rgamma(c - b))
    val = pref * r.value
    err = abs(pref) * r.abs_error_estimate
    return SeriesResult(val, err, r.terms_used, r.converged and converged_flag(val, err, tol))


def phi1_kummer_value(a, b, y, tol: float = DEFAULT_TOL) -> SeriesResult:
    """Phi_1[a, b; a-b+1; -1, y] as a combination of two 1F2 series in y^2/4."""
    a, b, y = as_complex(a), as_complex(b), as_complex(y)
    if b.real >= 1:
        raise DomainError("summation at x=-1 needs Re(b) < 1")
    if is_nonpositive_int(a - b + 1):
        raise PoleError("summation at x=-1 needs a-b+1 off the nonpositive integers")
    z = y * y / 4
    # Gamma(a/2)/Gamma(a) and Gamma(a/2+1/2)/Gamma(a) via the duplication formula
    common = complex(_g.gamma(a - b + 1)) * math.sqrt(math.pi) * cpow(2.0, -a)
    even_pref = complex(_g.rgamma(a / 2 + 0.5)) * complex(_g.rgamma(a / 2 - b + 1))
    odd_pref = complex(_g.rgamma(a / 2)) * complex(_g.rgamma(a / 2 - b + 1.5))
    r_even = pfq([a / 2], [0.5, a / 2 - b + 1], z, tol=min(tol, 1e-15))
    r_odd = pfq([a / 2 + 0.5], [1.5, a / 2 - b + 1.5], z, tol=min(tol, 1e-15))
    t_even = common * even_pref * r_even.value
    t_odd = common * odd_pref * y * r_odd.value
    val = t_even + t_odd
    err = (abs(common * even_pref) * r_even.abs_error_estimate
           + abs(common * odd_pref * y) * r_odd.abs_error_estimate
           + 4e-16 * (abs(t_even) + abs(t_odd)))
    ok = r_even.converged and r_odd.converged
    return SeriesResult(val, err, r_even.terms_used + r_odd.terms_used,
                        ok and converged_flag(val, err, tol))


def _finite_sum(terms, tol) -> SeriesResult:
    val = 0j
    err = 0.0
    big = 0.0
    for w, r in terms:
        t = w * r.value
        val += t
        err += abs(w) * r.abs_error_estimate
        big = max(big, abs(t))
    err += 4e-16 * big * len(terms)
    return SeriesResult(val, err, len(terms), converged_flag(val, err, tol))


def phi1_reduction_cm(m: int, b, c, x, y, tol: float = DEFAULT_TOL) -> SeriesResult:
    """Phi_1[c+m, b; c; x, y] as e^y times a finite sum of m+1 Gauss functions."""
    b, c, x, y = (as_complex(v) for v in (b, c, x, y))
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    if is_nonpositive_int(c):
        raise PoleError("c must avoid the nonpositive integers")
    _check_region(x)
    ey = cmath.exp(y)
    terms = []
    for n in range(m + 1):
        w = ey * math.comb(m, n) * y ** n / pochhammer(c, n)
        terms.append((w, hyp2f1(c + m, b, c + n, x)))
    return _finite_sum(terms, tol)


def phi1_reduction_negm(m: int, b, c, x, y, tol: float = DEFAULT_TOL) -> SeriesResult:
    """Phi_1[-m, b; c; x, y] as a finite sum of terminating Gauss polynomials."""
    b, c, x, y = (as_complex(v) for v in (b, c, x, y))
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    if is_nonpositive_int(c):
        raise PoleError("c must avoid the nonpositive integers")
    _check_region(x)
    terms = []
    for n in range(m + 1):
        w = math.comb(m, n) * (-y) ** n / pochhammer(c, n)
        terms.append((w, hyp2f1(n - m, b, c + n, x)))
    return _finite_sum(terms, tol)
