"""Saran's triple hypergeometric function F_M."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .evaluator import evaluate_many
from .quadrature import adaptive, semi_infinite
from .special.gamma import rgamma
from .special.hyper import hyp1f1, hyp2f1
from .types import (
    DEFAULT_MAX_TERMS, DEFAULT_TOL, Phi1Params, SeriesResult, as_complex, converged_flag,
    is_nonpositive_int,
)


@dataclass(frozen=True)
class FmParams:
    """F_M[alpha1, alpha2, alpha2, beta1, beta2, beta1; gamma1, gamma2, gamma2]."""

    alpha1: complex
    alpha2: complex
    beta1: complex
    beta2: complex
    gamma1: complex
    gamma2: complex

    def __post_init__(self):
        for f in ("alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2"):
            object.__setattr__(self, f, as_complex(getattr(self, f)))
        if is_nonpositive_int(self.gamma1) or is_nonpositive_int(self.gamma2):
            raise PoleError("gamma1 and gamma2 must avoid the nonpositive integers")


def fm_series(q: FmParams, x, y, z, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Single series in z with a product of two Gauss functions per term.

    Converges for |z| < 1 and |z| < |1-x|, with y anywhere off [1, inf).
    """
    x, y, z = (as_complex(v) for v in (x, y, z))
    if abs(z) >= 1 or abs(z) >= abs(1 - x):
        raise DomainError("fm_series needs |z| < 1 and |z| < |1-x|")
    for v, name in ((x, "x"), (y, "y")):
        if v.imag == 0 and v.real >= 1:
            raise DomainError(f"{name} on the branch cut [1, inf)")
    a1, a2, b1, b2, g1, g2 = q.alpha1, q.alpha2, q.beta1, q.beta2, q.gamma1, q.gamma2
    ratio = max(abs(z), abs(z) / abs(1 - x))
    coef = 1 + 0j
    s = 0j
    err = 0.0
    top = 0.0
    quiet = 0
    kmin = 2 * max(abs(a2), abs(b1)) + 2
    t = 0j
    n = 0
    while n < max_terms:
        if coef != 0:
            f1 = hyp2f1(a1, b1 + n, g1, x)
            f2 = hyp2f1(a2 + n, b2, g2 + n, y)
            t = coef * f1.value * f2.value
            err += abs(coef) * (abs(f1.abs_error_estimate * f2.value)
                                + abs(f2.abs_error_estimate * f1.value))
        else:
            t = 0j
        s += t
        top = max(top, abs(s))
        if n >= kmin and abs(t) < tol * top:
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
        coef *= (a2 + n) * (b1 + n) / (g2 + n) * z / (n + 1)
        n += 1
    err += abs(t) * ratio / (1 - ratio) + 4e-16 * top
    done = n < max_terms
    return SeriesResult(s, err, n + 1, done and converged_flag(s, err, tol))


def fm_laplace(q: FmParams, x, y, z, rtol: float = 1e-11) -> SeriesResult:
    """Laplace integral over t of e^{-t} t^{beta1-1} 1F1(alpha1; gamma1; x t) Phi_1(y, z t).

    The Phi_1 factor comes from the evaluator. Needs Re(beta1) > 0 and
    Re(x+z) < 1.
    """
    x, y, z = (as_complex(v) for v in (x, y, z))
    b1 = q.beta1
    if b1.real <= 0:
        raise DomainError("fm_laplace needs Re(beta1) > 0")
    if (x + z).real >= 1:
        raise DomainError("Laplace integral diverges for Re(x+z) >= 1")
    if y.imag == 0 and y.real >= 1:
        raise DomainError("y on the branch cut [1, inf)")
    inner = Phi1Params(q.alpha2, q.beta2, q.gamma2)

    def body(t):
        t = np.asarray(t, dtype=float)
        conf = np.array([hyp1f1(q.alpha1, q.gamma1, x * ti).value for ti in t])
        phi = evaluate_many(inner, np.full(t.shape, y), z * t, tol=1e-13)
        return np.exp(-t) * conf * phi

    # t = u^(1/s) on [0, 1] absorbs the t^(beta1-1) endpoint singularity
    s = min(b1.real, 1.0)

    def head(u):
        t = u ** (1.0 / s)
        return (1.0 / s) * np.exp((b1 / s - 1.0) * np.log(u)) * body(t)

    def tail(t):
        return np.exp((b1 - 1.0) * np.log(t)) * body(t)

    r1 = adaptive(head, 0.0, 1.0, rtol=rtol)
    r2 = semi_infinite(tail, start=1.0, first=1.0, rtol=rtol)
    scale = complex(rgamma(b1))
    val = scale * (r1.value + r2.value)
    err = abs(scale) * (r1.abs_error_estimate + r2.abs_error_estimate)
    return SeriesResult(val, err, r1.terms_used + r2.terms_used,
                        r1.converged and r2.converged and math.isfinite(err))
