"""Hypergeometric series kernels (numba-compatible).

Every kernel returns ``(value, abs_err, terms, status)`` where status is
OK, NOT_CONVERGED, POLE or CUT.
"""
import cmath
import math

from .._jit import jit
from ._gamma_kernels import (
    EULER_GAMMA, cpow, digamma, gamma, gamma_ratio, is_pole,
)

EPS = 2.220446049250313e-16
OK = 0
NOT_CONVERGED = 1
POLE = 2
CUT = 3

NAN = complex(math.nan, math.nan)


@jit
def pfq_kernel(num, den, z, tol, max_terms):
    p = num.shape[0]
    q = den.shape[0]
    pmax = 0.0
    for i in range(p):
        pmax = max(pmax, abs(num[i]))
    for j in range(q):
        pmax = max(pmax, abs(den[j]))
    kmin = 2.0 * pmax + 2.0
    if p <= q:
        kmin += 2.0 * abs(z)
    s = 1.0 + 0.0j
    term = 1.0 + 0.0j
    maxabs = 1.0
    k = 0
    while k < max_terms:
        r = z / (k + 1.0)
        done = False
        for i in range(p):
            f = num[i] + k
            if f == 0:
                done = True
            r *= f
        if done:
            return s, EPS * maxabs * (k + 1), k + 1, OK
        for j in range(q):
            d = den[j] + k
            if d == 0:
                return NAN, math.inf, k + 1, POLE
            r /= d
        term = term * r
        at = abs(term)
        ar = abs(r)
        if k + 1 >= kmin and ar < 1.0:
            tail = at / (1.0 - ar)
            if tail <= tol * abs(s):
                return s, tail + EPS * maxabs, k + 1, OK
        s += term
        if at > maxabs:
            maxabs = at
        k += 1
    return s, abs(term) + EPS * maxabs, k, NOT_CONVERGED


@jit
def f21_series(a, b, c, z, tol, max_terms):
    """Defining series of 2F1; converges for |z| < 1 or when terminating."""
    kmin = 2.0 * max(abs(a), max(abs(b), abs(c))) + 2.0
    s = 1.0 + 0.0j
    term = 1.0 + 0.0j
    maxabs = 1.0
    k = 0
    while k < max_terms:
        fa = a + k
        fb = b + k
        if fa == 0 or fb == 0:
            return s, EPS * maxabs * (k + 1), k + 1, OK
        d = c + k
        if d == 0:
            return NAN, math.inf, k + 1, POLE
        r = fa * fb / d * z / (k + 1.0)
        term = term * r
        at = abs(term)
        ar = abs(r)
        if k + 1 >= kmin and ar < 1.0:
            tail = at / (1.0 - ar)
            if tail <= tol * abs(s):
                return s, tail + EPS * maxabs, k + 1, OK
        s += term
        if at > maxabs:
            maxabs = at
        k += 1
    return s, abs(term) + EPS * maxabs, k, NOT_CONVERGED


@jit
def f11_series(a, c, z, tol, max_terms):
    kmin = 2.0 * max(abs(a), abs(c)) + 2.0 + 2.0 * abs(z)
    s = 1.0 + 0.0j
    term = 1.0 + 0.0j
    maxabs = 1.0
    k = 0
    while k < max_terms:
        fa = a + k
        if fa == 0:
            return s, EPS * maxabs * (k + 1), k + 1, OK
        d = c + k
        if d == 0:
            return NAN, math.inf, k + 1, POLE
        r = fa / d * z / (k + 1.0)
        term = term * r
        at = abs(term)
        ar = abs(r)
        if k + 1 >= kmin and ar < 1.0:
            tail = at / (1.0 - ar)
            if tail <= tol * abs(s):
                return s, tail + EPS * maxabs, k + 1, OK
        s += term
        if at > maxabs:
            maxabs = at
        k += 1
    return s, abs(term) + EPS * maxabs, k, NOT_CONVERGED


@jit
def hyp1f1_kernel(a, c, z, tol, max_terms):
    """1F1 with Kummer's transformation for Re(z) < 0 to avoid cancellation."""
    if z.real < 0.0 and not is_pole(a):
        v, e, n, st = f11_series(c - a, c, -z, tol, max_terms)
        ez = cmath.exp(z)
        return ez * v, abs(ez) * e, n, st
    return f11_series(a, c, z, tol, max_terms)


@jit
def _int_distance(w):
    return abs(w - round(w.real))


@jit
def _combine2(p1, v1, e1, p2, v2, e2):
    t1 = p1 * v1
    t2 = p2 * v2
    err = abs(p1) * e1 + abs(p2) * e2 + 4.0 * EPS * (abs(t1) + abs(t2))
    return t1 + t2, err


@jit
def _f21_integer_gap(a, b, c, z, m, tol, max_terms):
    """2F1 near z=1 when c-a-b = m is an integer (logarithmic cases)."""
    w = 1.0 - z
    lw = cmath.log(w)
    mp = abs(m)
    fin = 0.0j
    if m >= 0:
        aa = a + m
        bb = b + m
        if m > 0:
            t = 1.0 + 0.0j
            for n in range(m):
                fin += t
                if n < m - 1:
                    t = t * (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w
            fin = fin * gamma(complex(m)) * gamma_ratio(a + b + m, 1.0 + 0.0j, a + m, b + m)
        pref = -gamma_ratio(a + b + m, 1.0 + 0.0j, a, b) * cpow(-w, complex(m))
        psa = digamma(aa)
        psb = digamma(bb)
    else:
        aa = a
        bb = b
        t = 1.0 + 0.0j
        for n in range(mp):
            fin += t
            if n < mp - 1:
                t = t * (a - mp + n) * (b - mp + n) / ((n + 1.0) * (1.0 - mp + n)) * w
        fin = fin * gamma(complex(mp)) * gamma_ratio(a + b - mp, 1.0 + 0.0j, a, b) * cpow(w, complex(-mp))
        sgn = 1.0 if mp % 2 == 0 else -1.0
        pref = -sgn * gamma_ratio(a + b - mp, 1.0 + 0.0j, a - mp, b - mp)
        psa = digamma(aa)
        psb = digamma(bb)
    # sum_n (aa)_n (bb)_n / (n! (n+mp)!) w^n [lw - psi(n+1) - psi(n+mp+1) + psi(aa+n) + psi(bb+n)]
    coef = 1.0 + 0.0j
    for j in range(1, mp + 1):
        coef = coef / j
    h1 = -EULER_GAMMA
    h2 = -EULER_GAMMA
    for j in range(1, mp + 1):
        h2 += 1.0 / j
    s = 0.0j
    maxabs = 0.0
    small = 0
    kmin = 2.0 * max(abs(aa), abs(bb)) + 2.0
    n = 0
    while n < max_terms:
        term = coef * (lw - h1 - h2 + psa + psb)
        s += term
        at = abs(term)
        if at > maxabs:
            maxabs = at
        if n >= kmin and at <= tol * abs(s):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        fa = aa + n
        fb = bb + n
        coef = coef * fa * fb / ((n + 1.0) * (n + 1.0 + mp)) * w
        psa += 1.0 / fa
        psb += 1.0 / fb
        h1 += 1.0 / (n + 1.0)
        h2 += 1.0 / (n + 1.0 + mp)
        n += 1
    st = OK if n < max_terms else NOT_CONVERGED
    val = fin + pref * s
    err = abs(pref) * (abs(coef) * (abs(lw) + 10.0) + EPS * maxabs * 8.0) + EPS * abs(fin) * 8.0
    return val, err, n + 1, st


@jit
def hyp2f1_kernel(a, b, c, z, tol, max_terms):
    """Gauss 2F1 on the cut plane z not in (1, inf) via linear transformations."""
    if z == 0:
        return 1.0 + 0.0j, 0.0, 1, OK
    if is_pole(a) or is_pole(b):
        return f21_series(a, b, c, z, tol, max_terms)
    if is_pole(c):
        return NAN, math.inf, 0, POLE
    if is_pole(c - a) or is_pole(c - b):
        # Euler transformation gives a polynomial
        v, e, n, st = f21_series(c - a, c - b, c, z, tol, max_terms)
        if z.imag == 0.0 and z.real >= 1.0:
            if z.real == 1.0 and (c - a - b).real > 0.0:
                return 0.0j, 0.0, n, st
            if z.real == 1.0 and (c - a - b) == 0:
                return v, e, n, st
            return NAN, math.inf, 0, CUT
        pw = cpow(1.0 - z, c - a - b)
        return pw * v, abs(pw) * e, n, st
    if z.imag == 0.0 and z.real >= 1.0:
        if z.real == 1.0 and (c - a - b).real > 0.0:
            return gamma_ratio(c, c - a - b, c - a, c - b), 0.0, 1, OK
        return NAN, math.inf, 0, CUT

    cab = c - a - b
    dcab = _int_distance(cab)
    cab_int = dcab < 1e-10
    cab_ok = dcab >= 1e-3
    dab = _int_distance(a - b)
    ab_ok = dab >= 1e-3

    best = 0
    wbest = abs(z)
    wz = abs(z / (z - 1.0))
    if wz < wbest:
        best = 1
        wbest = wz
    if cab_ok or cab_int:
        w = abs(1.0 - z)
        if w < wbest:
            best = 2
            wbest = w
    if ab_ok:
        w = 1.0 / abs(z)
        if w < wbest and not (z.imag == 0.0 and z.real > 0.0):
            best = 3
            wbest = w
        w = 1.0 / abs(1.0 - z)
        if w < wbest:
            best = 4
            wbest = w
    if cab_ok and not (z.imag == 0.0 and z.real <= 0.0):
        w = abs(1.0 - 1.0 / z)
        if w < wbest:
            best = 5
            wbest = w

    if best == 0:
        return f21_series(a, b, c, z, tol, max_terms)
    if best == 1:
        w = z / (z - 1.0)
        if abs(c - a) + abs(b) <= abs(a) + abs(c - b):
            pw = cpow(1.0 - z, -b)
            v, e, n, st = f21_series(c - a, b, c, w, tol, max_terms)
        else:
            pw = cpow(1.0 - z, -a)
            v, e, n, st = f21_series(a, c - b, c, w, tol, max_terms)
        return pw * v, abs(pw) * e, n, st
    if best == 2:
        if cab_int:
            return _f21_integer_gap(a, b, c, z, int(round(cab.real)), tol, max_terms)
        w = 1.0 - z
        A1 = gamma_ratio(c, cab, c - a, c - b)
        A2 = gamma_ratio(c, -cab, a, b) * cpow(w, cab)
        v1, e1, n1, s1 = f21_series(a, b, 1.0 - cab, w, tol, max_terms)
        v2, e2, n2, s2 = f21_series(c - a, c - b, 1.0 + cab, w, tol, max_terms)
        v, e = _combine2(A1, v1, e1, A2, v2, e2)
        return v, e, n1 + n2, max(s1, s2)
    B1 = gamma_ratio(c, b - a, b, c - a)
    B2 = gamma_ratio(c, a - b, a, c - b)
    if best == 3:
        w = 1.0 / z
        P1 = B1 * cpow(-z, -a)
        P2 = B2 * cpow(-z, -b)
        v1, e1, n1, s1 = f21_series(a, a - c + 1.0, a - b + 1.0, w, tol, max_terms)
        v2, e2, n2, s2 = f21_series(b, b - c + 1.0, b - a + 1.0, w, tol, max_terms)
        v, e = _combine2(P1, v1, e1, P2, v2, e2)
        return v, e, n1 + n2, max(s1, s2)
    if best == 4:
        w = 1.0 / (1.0 - z)
        P1 = B1 * cpow(1.0 - z, -a)
        P2 = B2 * cpow(1.0 - z, -b)
        v1, e1, n1, s1 = f21_series(a, c - b, a - b + 1.0, w, tol, max_terms)
        v2, e2, n2, s2 = f21_series(b, c - a, b - a + 1.0, w, tol, max_terms)
        v, e = _combine2(P1, v1, e1, P2, v2, e2)
        return v, e, n1 + n2, max(s1, s2)
    w = 1.0 - 1.0 / z
    P1 = gamma_ratio(c, cab, c - a, c - b) * cpow(z, -a)
    P2 = gamma_ratio(c, -cab, a, b) * cpow(1.0 - z, cab) * cpow(z, a - c)
    v1, e1, n1, s1 = f21_series(a, a - c + 1.0, 1.0 - cab, w, tol, max_terms)
    v2, e2, n2, s2 = f21_series(c - a, 1.0 - a, 1.0 + cab, w, tol, max_terms)
    v, e = _combine2(P1, v1, e1, P2, v2, e2)
    return v, e, n1 + n2, max(s1, s2)
