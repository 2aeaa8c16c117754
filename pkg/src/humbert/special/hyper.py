"""Generalised hypergeometric series and the Gauss function on the cut plane."""
from __future__ import annotations

import numpy as np

from ..errors import DomainError, PoleError
from ..types import (
    DEFAULT_MAX_TERMS, DEFAULT_TOL, SeriesResult, as_complex, converged_flag,
    is_nonpositive_int,
)
from . import _gamma_kernels as _g
from . import _hyper_kernels as _k


def _result(v, e, n, st, tol, what):
    if st == _k.POLE:
        raise PoleError(f"{what}: denominator parameter hits a nonpositive integer")
    if st == _k.CUT:
        raise DomainError(f"{what}: argument on the branch cut [1, inf)")
    v = complex(v)
    e = float(e)
    return SeriesResult(v, e, max(int(n), 1), st == _k.OK and converged_flag(v, e, tol))


def pfq(numer, denom, z, tol: float = DEFAULT_TOL,
        max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Truncated pFq series.

    The error estimate is the geometric tail bound ``|t|/(1-|r|)`` of the first
    omitted term ``t`` (with current term ratio ``r``) plus a rounding floor.
    """
    num = np.array([as_complex(v) for v in numer], dtype=np.complex128)
    den = np.array([as_complex(v) for v in denom], dtype=np.complex128)
    z = as_complex(z)
    terminating = any(is_nonpositive_int(v) for v in num)
    if not terminating and z != 0:
        if len(num) == len(den) + 1 and abs(z) >= 1:
            raise DomainError("pfq: nonterminating p=q+1 series needs |z| < 1")
        if len(num) > len(den) + 1:
            raise DomainError("pfq: nonterminating series with p > q+1 diverges")
    v, e, n, st = _k.pfq_kernel(num, den, z, float(tol), int(max_terms))
    return _result(v, e, n, st, tol, "pfq")


def hyp2f1(a, b, c, z, tol: float = 1e-15,
           max_terms: int = 100000) -> SeriesResult:
    """Gauss 2F1(a,b;c;z) for z off the cut (1, inf)."""
    a, b, c, z = (as_complex(v) for v in (a, b, c, z))
    v, e, n, st = _k.hyp2f1_kernel(a, b, c, z, float(tol), int(max_terms))
    return _result(v, e, n, st, tol, "hyp2f1")


def hyp1f1(a, c, z, tol: float = 1e-15,
           max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Kummer 1F1(a;c;z)."""
    a, c, z = (as_complex(v) for v in (a, c, z))
    v, e, n, st = _k.hyp1f1_kernel(a, c, z, float(tol), int(max_terms))
    return _result(v, e, n, st, tol, "hyp1f1")


def hyp1f1_regularized(a, c, z, tol: float = 1e-15,
                       max_terms: int = DEFAULT_MAX_TERMS) -> complex:
    """1F1(a;c;z)/Gamma(c), entire in c."""
    a, c, z = (as_complex(v) for v in (a, c, z))
    if not is_nonpositive_int(c):
        r = hyp1f1(a, c, z, tol, max_terms)
        return r.value * complex(_g.rgamma(c))
    # terms with n < 1-c vanish; restart the series at n0 = 1-c
    n0 = int(round(1 - c.real))
    if is_nonpositive_int(a) and -a.real < n0:
        return 0j
    lead = complex(_g.poch(a, n0)) * z ** n0 / complex(_g.gamma(complex(n0 + 1)))
    # (a)_{n0+k} z^{n0+k} / ((n0+k)! k!) = lead (a+n0)_k z^k / ((n0+1)_k k!)
    return lead * hyp1f1(a + n0, n0 + 1.0, z, tol, max_terms).value
