"""Coefficient generators for the asymptotic expansions of Phi_1.

All sums here are finite; pole cases raise PoleError.
"""
from __future__ import annotations

import math

from ..errors import PoleError
from ..special.gamma import pochhammer, pochhammer_signed
from ..special.hyper import hyp1f1_regularized, pfq
from ..types import DEFAULT_MAX_TERMS, DEFAULT_TOL, Phi1Params, SeriesResult, as_complex


def _poch(z, n):
    return pochhammer(z, n)


def _fact(n):
    return float(math.factorial(n))


def large_x_poly(k: int, p: Phi1Params, y) -> complex:
    """(a-c+1)_k 1F1(-k; c-a-k; y) as a pole-free degree-k polynomial in y."""
    a, c = p.a, p.c
    s = 0j
    for n in range(k + 1):
        s += _poch(-k, n) * _poch(a - c + 1, k - n) * (-y) ** n / _fact(n)
    return s


def large_x_terms(p: Phi1Params, x, y, order: int):
    """Per-k terms of the two convergent 1/x families, without prefactors.

    Family one: (a)_k/((a-b+1)_k k!) (a-c+1)_k 1F1(-k;c-a-k;y) x^{-k}.
    Family two: (-1)^k (b)_k/((b-a+1)_k k!) 1F1(a-b-k;c-b-k;y)/Gamma(c-b-k) x^{-k}.
    """
    a, b, c = p.a, p.b, p.c
    one, two = [], []
    for k in range(order + 1):
        xk = x ** (-k)
        one.append(_poch(a, k) / (_poch(a - b + 1, k) * _fact(k)) * large_x_poly(k, p, y) * xk)
        reg = hyp1f1_regularized(a - b - k, c - b - k, y)
        two.append((-1) ** k * _poch(b, k) / (_poch(b - a + 1, k) * _fact(k)) * reg * xk)
    return one, two


def left_poly(n: int, p: Phi1Params, x) -> complex:
    """(a-c+1)_n 2F1(-n, b; c-a-n; x) written without the c-a-n denominators."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for j in range(n + 1):
        s += _poch(-n, j) * _poch(b, j) * _poch(a - c + 1, n - j) * (-x) ** j / _fact(j)
    return s


def right_poly(n: int, p: Phi1Params, x) -> complex:
    """(1-a)_n 2F1(a, b; a-n; x) = (1-x)^{-b} sum_j C(n,j)(1-a)_{n-j}(b)_j (x/(x-1))^j."""
    a, b = p.a, p.b
    z = x / (x - 1)
    s = 0j
    for j in range(n + 1):
        s += math.comb(n, j) * _poch(1 - a, n - j) * _poch(b, j) * z ** j
    return s * (1 - x) ** (-b)


def kdf_11_1(n: int, alpha, beta, u, v) -> complex:
    """Finite double sum sum_{r+s<=n} (-n)_{r+s} (alpha)_r (beta)_s u^r v^s / (r! s!)."""
    alpha, beta, u, v = (as_complex(t) for t in (alpha, beta, u, v))
    s = 0j
    for r in range(n + 1):
        for q in range(n - r + 1):
            s += (_poch(-n, r + q) * _poch(alpha, r) * _poch(beta, q)
                  * u ** r * v ** q / (_fact(r) * _fact(q)))
    return s


def scaled_kdf_11_1(n: int, alpha, beta, y0, u, v) -> complex:
    """y0^n F[-n: alpha; beta; u/y0, v/y0], finite at y0 = 0."""
    s = 0j
    for r in range(n + 1):
        for q in range(n - r + 1):
            s += (_poch(-n, r + q) * _poch(alpha, r) * _poch(beta, q)
                  * u ** r * v ** q * y0 ** (n - r - q) / (_fact(r) * _fact(q)))
    return s


def lagrange_g(n: int, a, a2, p_, q_) -> complex:
    """Two-variable Lagrange polynomial: coefficient of z^n in (1-pz)^{-a}(1-qz)^{-a2}."""
    s = 0j
    for r in range(n + 1):
        s += _poch(a, r) * _poch(a2, n - r) / (_fact(r) * _fact(n - r)) * p_ ** r * q_ ** (n - r)
    return s


def coeff_a_k(k: int, p: Phi1Params, beta) -> complex:
    """Coefficient a_k of the single-family joint expansion in powers of (1-x)^{-1}."""
    a, b, c = p.a, p.b, p.c
    beta = as_complex(beta)
    if k == 0:
        return 1 + 0j
    s = 0j
    for j in range(k + 1):
        t = 0j
        for i in range(min(j, k - j) + 1):
            den = _poch(c - a, i) * _poch(a - b - k, i)
            if den == 0:
                raise PoleError("coeff_a_k: terminating 3F2 hits a denominator zero")
            t += _poch(-j, i) * _poch(j - k, i) * _poch(c - 1, i) / (den * _fact(i))
        s += (_poch(c - a, j) * _poch(c - a, k - j) * _poch(j + b - a + 1, k - j)
              / (_fact(j) * _fact(k - j)) * t * beta ** (j - k))
    return s


def coeff_a1(k: int, p: Phi1Params, lam) -> complex:
    """a_k^(1)(lambda) of the joint lambda expansion (exponential family)."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for n in range(k + 1):
        s += (_poch(b, n) * _poch(b - a + 1 + n, k - n) * _poch(c - a, k - n)
              / (_fact(n) * _fact(k - n)) * (-lam) ** n)
    return s


def coeff_a2(k: int, p: Phi1Params, lam) -> complex:
    """a_k^(2)(lambda) = (a)_k (a-c+1)_k / k! U(a+k, a-b+k+1, lambda)."""
    from ..special.kummer import kummer_u
    a, b, c = p.a, p.b, p.c
    pre = _poch(a, k) * _poch(a - c + 1, k) / _fact(k)
    if pre == 0:
        return 0j
    return pre * kummer_u(a + k, a - b + k + 1, lam)


def coeff_b1(k: int, p: Phi1Params, eta) -> complex:
    """b_k^(1)(eta): sum over m + 2n = k."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for n in range(k // 2 + 1):
        m = k - 2 * n
        s += (_poch(a, m + n) * _poch(a - c + 1, m) / (_poch(a - b + 1, m + n) * _fact(m) * _fact(n))
              * eta ** n)
    return s


def coeff_b2(k: int, p: Phi1Params, eta) -> complex:
    """b_k^(2)(eta): sum over m + n = k with signed Pochhammer symbols."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for n in range(k + 1):
        m = k - n
        num = pochhammer_signed(b - c + 1, m - n)
        den = pochhammer_signed(b - a + 1, m - n)
        s += _poch(b, m) * num / (den * _fact(m) * _fact(n)) * eta ** n
    return s


def coeff_c1(k: int, p: Phi1Params, eta) -> complex:
    """c_k^(1)(eta): (-1)^k sum over m + 2n = k."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for n in range(k // 2 + 1):
        m = k - 2 * n
        s += (_poch(a, m + n) * _poch(a - c + 1, m) * _poch(b, n) / (_fact(m) * _fact(n))
              * (-eta) ** n)
    return (-1) ** k * s


def coeff_c2(k: int, p: Phi1Params, eta) -> complex:
    """c_k^(2)(eta): sum over m + n = k with the signed Pochhammer (1-a)_{m-n}."""
    a, b, c = p.a, p.b, p.c
    s = 0j
    for n in range(k + 1):
        m = k - n
        s += (_poch(c - a, m) * _poch(a, n) * _poch(b, n) * pochhammer_signed(1 - a, m - n)
              / (_fact(m) * _fact(n)) * (-eta) ** n)
    return s


def kdf_01_21(a_, u, v, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """sum_{m,n} (a)_n / ((a+1)_n (2)_{m+n}) u^m v^n, summed by diagonals.

    This is the Kampe de Feriet function with parameters (-: 1; a, 1; 2: -; a+1).
    """
    a_, u, v = (as_complex(t) for t in (a_, u, v))
    if a_ == 0 or pfq_pole(a_):
        raise PoleError("kdf_01_21 needs a+n != 0 for all n")
    s = 0j
    fact = 1.0     # (K+1)!
    small = 0
    kmin = 2 * (abs(u) + abs(v)) + 4
    big = 0.0
    d = 0j
    for K in range(max_terms + 1):
        fact *= (K + 1)
        d = 0j
        for n in range(K + 1):
            d += a_ / (a_ + n) * u ** (K - n) * v ** n
        d /= fact
        if K >= kmin and abs(d) <= tol * abs(s):
            small += 1
            if small >= 2:
                return SeriesResult(s, abs(d) + 4e-16 * big, K, True)
        else:
            small = 0
        s += d
        big = max(big, abs(d))
    return SeriesResult(s, abs(d) + 4e-16 * big, max_terms, False)


def pfq_pole(a_) -> bool:
    a_ = complex(a_)
    return a_.imag == 0 and a_.real < 0 and a_.real == round(a_.real)


def two_f_two(a1, a2, b1, b2, z) -> complex:
    return pfq([a1, a2], [b1, b2], z, tol=1e-15).value
