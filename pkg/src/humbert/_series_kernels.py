"""Hot loops for the convergent two-variable series."""
import math

import numpy as np

from ._jit import jit
from .special._hyper_kernels import (
    CUT, EPS, NOT_CONVERGED, OK, POLE, hyp2f1_kernel,
)


@jit
def diagonal_kernel(a, b, c, cp, x, y, psi, tol, max_terms):
    """Sum a (m, n) double series by diagonals k = m + n.

    psi=False: Phi_1 terms (a)_{m+n}(b)_m/(c)_{m+n} x^m y^n/(m! n!).
    psi=True:  Psi_1 terms (a)_{m+n}(b)_m/((c)_m (cp)_n) x^m y^n/(m! n!).
    """
    size = max_terms + 2
    P = np.empty(size, dtype=np.complex128)
    Q = np.empty(size, dtype=np.complex128)
    P[0] = 1.0
    Q[0] = 1.0
    kmin = 2.0 * max(max(abs(a), abs(b)), max(abs(c), abs(cp))) + 2.0 * abs(y) + 4.0
    lead = 1.0 + 0.0j   # (a)_k/(c)_k for Phi_1, (a)_k for Psi_1
    s = 0.0j
    maxabs = 0.0
    small = 0
    ad = 0.0
    k = 0
    while k <= max_terms:
        if k > 0:
            m = k - 1
            if psi:
                P[k] = P[m] * (b + m) / ((c + m) * k) * x
                Q[k] = Q[m] * y / ((cp + m) * k)
                lead = lead * (a + m)
            else:
                P[k] = P[m] * (b + m) / k * x
                Q[k] = Q[m] * y / k
                lead = lead * (a + m) / (c + m)
        inner = 0.0j
        for j in range(k + 1):
            inner += P[j] * Q[k - j]
        d = lead * inner
        ad = abs(d)
        if not (math.isfinite(d.real) and math.isfinite(d.imag)):
            # terms overflowed before the tail became small
            return s, math.inf, k, NOT_CONVERGED
        if k >= kmin and ad <= tol * abs(s):
            small += 1
            if small >= 2:
                return s, ad + EPS * maxabs * 4.0, k, OK
        else:
            small = 0
        s += d
        if ad > maxabs:
            maxabs = ad
        k += 1
    return s, ad + EPS * maxabs * 4.0, k, NOT_CONVERGED


@jit
def outer_2f1_kernel(a, b, c, cp, x, y, psi, tol, max_terms, inner_tol):
    """Outer sum over n of Gauss functions times y^n/n!.

    psi=False: (a)_n/(c)_n 2F1(a+n, b; c+n; x), the Phi_1 continuation.
    psi=True:  (a)_n/(cp)_n 2F1(a+n, b; c; x), the same idea for Psi_1.
    Stops after three consecutive terms below tol * max partial-sum modulus.
    """
    kmin = 2.0 * abs(y) + 2.0
    coef = 1.0 + 0.0j
    s = 0.0j
    err = 0.0
    maxsum = 0.0
    maxterm = 0.0
    small = 0
    term = 0.0j
    n = 0
    while n < max_terms:
        if coef != 0:
            cn = c if psi else c + n
            f, ef, nt, st = hyp2f1_kernel(a + n, b, cn, x, inner_tol, 200000)
            if st == POLE or st == CUT:
                return s, math.inf, n + 1, st
            term = coef * f
            err += abs(coef) * ef
        else:
            term = 0.0j
        s += term
        at = abs(term)
        if at > maxterm:
            maxterm = at
        if abs(s) > maxsum:
            maxsum = abs(s)
        if n >= kmin and at < tol * maxsum:
            small += 1
            if small >= 3:
                return s, err + at + EPS * maxterm * 4.0, n + 1, OK
        else:
            small = 0
        lower = cp + n if psi else c + n
        coef = coef * (a + n) / lower * y / (n + 1.0)
        n += 1
    return s, err + abs(term) + EPS * maxterm * 4.0, n, NOT_CONVERGED


@jit
def phi1_2f1_kernel(a, b, c, x, y, tol, max_terms, inner_tol):
    """Outer sum over n of (a)_n/(c)_n 2F1(a+n, b; c+n; x) y^n/n!."""
    return outer_2f1_kernel(a, b, c, 1.0 + 0.0j, x, y, False, tol, max_terms, inner_tol)


@jit
def phi1_2f1_many(a, b, c, xs, ys, tol, max_terms, inner_tol, max_rel=math.inf):
    """Vectorised phi1_2f1_kernel over paired argument arrays.

    Points whose error estimate exceeds max_rel * |value| come back as NaN.
    """
    out = np.empty(xs.shape[0], dtype=np.complex128)
    for i in range(xs.shape[0]):
        v, e, n, st = phi1_2f1_kernel(a, b, c, xs[i], ys[i], tol, max_terms, inner_tol)
        if (st == OK or st == NOT_CONVERGED) and e <= max_rel * abs(v):
            out[i] = v
        else:
            out[i] = complex(math.nan, math.nan)
    return out
