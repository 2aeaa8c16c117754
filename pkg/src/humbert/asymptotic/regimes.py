"""Asymptotic expansions of Phi_1 for large and degenerate arguments.

Each ``*_expansion`` builder returns an AsymptoticExpansion whose families
can be inspected or summed individually; the matching ``expand_*`` function
returns the truncated sum.
"""
from __future__ import annotations

import cmath
import math

from ..errors import DomainError, PoleError
from ..reference import on_cut
from ..special.gamma import EULER_GAMMA, cpow, digamma, gamma_ratio, pochhammer
from ..special.hyper import pfq
from ..types import Phi1Params, TruncatedValue, as_complex, is_nonpositive_int, near_int
from . import coefficients as co
from .expansion import AsymptoticExpansion, TermGroup

DEFAULT_DELTA = 0.05
DEFAULT_EXCLUSION = 0.1
FRACTION_EPS = 0.05


def _fact(n: int) -> float:
    return float(math.factorial(n))


def _check_order(order: int):
    if order < 0 or int(order) != order:
        raise DomainError("order must be a nonnegative integer")


def _in_sector(z: complex, half_width: float) -> bool:
    return z != 0 and abs(cmath.phase(z)) <= half_width


def _finish(exp: AsymptoticExpansion, order: int, optimal: bool) -> TruncatedValue:
    return exp.truncate(order, optimal=optimal)


# -- large x ---------------------------------------------------------------

def large_x_expansion(p: Phi1Params, x, y, order: int) -> AsymptoticExpansion:
    x, y = as_complex(x), as_complex(y)
    _check_order(order)
    a, b, c = p.a, p.b, p.c
    if near_int(a - b, 0.0):
        raise DomainError("large-x expansion needs a-b not an integer")
    if abs(x) <= 1:
        raise DomainError("large-x expansion needs |x| > 1")
    if x.imag == 0 and x.real > 0:
        raise DomainError("x on the branch cut [1, inf)")
    one, two = co.large_x_terms(p, x, y, order)
    mx = -x
    pre1 = gamma_ratio([c, b - a], [b, c - a]) * cpow(mx, -a)
    pre2 = gamma_ratio([c, a - b], [a]) * cpow(mx, -b)
    ones = tuple(1 + 0j for _ in one)
    return AsymptoticExpansion(
        (TermGroup(pre1, "(-x)^(-a) x^(-k)", tuple(one), ones),
         TermGroup(pre2, "(-x)^(-b) x^(-k)", tuple(two), ones)),
        "|x| > 1, |arg(-x)| < pi", "x")


def expand_large_x(p: Phi1Params, x, y, order: int) -> TruncatedValue:
    """Convergent two-family expansion in 1/x, valid for |x| > 1."""
    return large_x_expansion(p, x, y, order).truncate(order)


# -- large y ---------------------------------------------------------------

def _check_x(x: complex):
    if on_cut(x):
        raise DomainError("x on the branch cut [1, inf)")


def large_y_left_expansion(p: Phi1Params, x, y, order: int,
                           delta: float = DEFAULT_DELTA) -> AsymptoticExpansion:
    x, y = as_complex(x), as_complex(y)
    _check_order(order)
    _check_x(x)
    a, c = p.a, p.c
    if is_nonpositive_int(c - a):
        raise DomainError("large-y-left expansion needs c-a off the nonpositive integers")
    if not _in_sector(-y, math.pi / 2 - delta):
        raise DomainError("y outside the sector |arg(-y)| <= pi/2 - delta")
    pre = gamma_ratio([c], [c - a])
    coefs = tuple(pochhammer(a, n) / _fact(n) * co.left_poly(n, p, x) for n in range(order + 1))
    powers = tuple(cpow(-y, -a - n) for n in range(order + 1))
    return AsymptoticExpansion((TermGroup(pre, "(-y)^(-a-n)", coefs, powers),),
                               "|arg(-y)| <= pi/2 - delta", "y")


def expand_large_y_left(p: Phi1Params, x, y, order: int, delta: float = DEFAULT_DELTA,
                        optimal: bool = False) -> TruncatedValue:
    """Algebraic expansion as y -> infinity in the left half-plane."""
    return _finish(large_y_left_expansion(p, x, y, order, delta), order, optimal)


def _right_group(p: Phi1Params, x: complex, big: complex, order: int, pre: complex,
                 scale: str) -> TermGroup:
    a, c = p.a, p.c
    coefs = tuple(pochhammer(c - a, n) / _fact(n) * co.right_poly(n, p, x) for n in range(order + 1))
    powers = tuple(cpow(big, a - c - n) for n in range(order + 1))
    return TermGroup(pre, scale, coefs, powers)


def large_y_right_expansion(p: Phi1Params, x, y, order: int,
                            delta: float = DEFAULT_DELTA) -> AsymptoticExpansion:
    x, y = as_complex(x), as_complex(y)
    _check_order(order)
    _check_x(x)
    a, c = p.a, p.c
    if is_nonpositive_int(a):
        raise DomainError("large-y-right expansion needs a off the nonpositive integers")
    if not _in_sector(y, math.pi / 2 - delta):
        raise DomainError("y outside the sector |arg(y)| <= pi/2 - delta")
    pre = gamma_ratio([c], [a]) * cmath.exp(y)
    return AsymptoticExpansion((_right_group(p, x, y, order, pre, "e^y y^(a-c-n)"),),
                               "|arg(y)| <= pi/2 - delta", "y")


def expand_large_y_right(p: Phi1Params, x, y, order: int, delta: float = DEFAULT_DELTA,
                         optimal: bool = False) -> TruncatedValue:
    """Exponential expansion as y -> infinity in the right half-plane."""
    return _finish(large_y_right_expansion(p, x, y, order, delta), order, optimal)


def large_y_expansion(p: Phi1Params, x, y, order: int) -> AsymptoticExpansion:
    """Algebraic plus exponential families for any direction of large y.

    With principal branches of (-y)^(-a) and y^(a-c) the two families
    together cover every direction; each one-sided expansion above is the
    dominant half of this sum inside its sector.
    """
    x, y = as_complex(x), as_complex(y)
    _check_order(order)
    _check_x(x)
    if y == 0:
        raise DomainError("large-y expansion needs y != 0")
    a, c = p.a, p.c
    left = TermGroup(
        gamma_ratio([c], [c - a]), "(-y)^(-a-n)",
        tuple(pochhammer(a, n) / _fact(n) * co.left_poly(n, p, x) for n in range(order + 1)),
        tuple(cpow(-y, -a - n) for n in range(order + 1)))
    right = _right_group(p, x, y, order, gamma_ratio([c], [a]) * cmath.exp(y), "e^y y^(a-c-n)")
    return AsymptoticExpansion((left, right), "|y| large, any direction", "y")


def _check_euler_params(p: Phi1Params, what: str):
    if not (p.c.real > p.a.real > 0):
        raise DomainError(f"{what} needs Re(c) > Re(a) > 0")


def _check_lambda(lam) -> float:
    lam = as_complex(lam)
    if lam.imag != 0 or lam.real == 0:
        raise DomainError("lambda must be real and nonzero")
    return lam.real


def imaginary_y_expansion(p: Phi1Params, x, lam, order: int) -> AsymptoticExpansion:
    x = as_complex(x)
    lam = _check_lambda(lam)
    _check_order(order)
    _check_x(x)
    _check_euler_params(p, "imaginary-y expansion")
    a, c = p.a, p.c
    iy = 1j * lam
    left = TermGroup(
        gamma_ratio([c], [c - a]), "(-i lambda)^(-a-n)",
        tuple(pochhammer(a, n) / _fact(n) * co.left_poly(n, p, x) for n in range(order + 1)),
        tuple(cpow(-iy, -a - n) for n in range(order + 1)))
    right = _right_group(p, x, iy, order, gamma_ratio([c], [a]) * cmath.exp(iy),
                         "e^(i lambda) (i lambda)^(a-c-n)")
    return AsymptoticExpansion((left, right), "y = i lambda, lambda real", "y")


def expand_imaginary_y(p: Phi1Params, x, lam, order: int,
                       optimal: bool = False) -> TruncatedValue:
    """Both families for y = i*lambda with real |lambda| large."""
    return _finish(imaginary_y_expansion(p, x, lam, order), order, optimal)


def shifted_imaginary_y_expansion(p: Phi1Params, x, y0, lam, order: int) -> AsymptoticExpansion:
    x, y0 = as_complex(x), as_complex(y0)
    lam = _check_lambda(lam)
    _check_order(order)
    _check_x(x)
    _check_euler_params(p, "shifted imaginary-y expansion")
    a, b, c = p.a, p.b, p.c
    iy = 1j * lam
    # y0^n F[-n: a-c+1; b; -1/y0, -x/y0] and (-y0)^n F[-n: 1-a; b; 1/y0, x/(y0(x-1))]
    lc = tuple(pochhammer(a, n) / _fact(n) * co.scaled_kdf_11_1(n, a - c + 1, b, y0, -1, -x)
               for n in range(order + 1))
    z = x / (x - 1) if x != 1 else 0j
    rc = tuple(pochhammer(c - a, n) / _fact(n) * (-1) ** n
               * co.scaled_kdf_11_1(n, 1 - a, b, y0, 1, z) for n in range(order + 1))
    left = TermGroup(gamma_ratio([c], [c - a]), "(-i lambda)^(-a-n)", lc,
                     tuple(cpow(-iy, -a - n) for n in range(order + 1)))
    right = TermGroup(gamma_ratio([c], [a]) * cpow(1 - x, -b) * cmath.exp(y0 + iy),
                      "(1-x)^(-b) e^(y0 + i lambda) (i lambda)^(a-c-n)", rc,
                      tuple(cpow(iy, a - c - n) for n in range(order + 1)))
    return AsymptoticExpansion((left, right), "y = y0 + i lambda, lambda real", "y")


def expand_shifted_imaginary_y(p: Phi1Params, x, y0, lam, order: int,
                               optimal: bool = False) -> TruncatedValue:
    """Both families for y = y0 + i*lambda, y0 fixed and |lambda| large."""
    return _finish(shifted_imaginary_y_expansion(p, x, y0, lam, order), order, optimal)


# -- joint x, y large --------------------------------------------------------

def default_w(p: Phi1Params) -> float:
    """Smallest admissible w on a 0.25 grid above 1.5 + max{Re(a-b), Re(1-b)}."""
    a, b = p.a, p.b
    w = 1.5 + max((a - b).real, (1 - b).real)
    for _ in range(8):
        if _w_fractions_ok(p, w):
            return w
        w += 0.25
    return w


def _w_fractions_ok(p: Phi1Params, w: float) -> bool:
    a, b = p.a, p.b
    for t in (w - (a - b).real, w + b.real - 1):
        f = t - math.floor(t)
        if not (FRACTION_EPS < f < 1):
            return False
    return True


def joint_beta_expansion(p: Phi1Params, x, y, order: int, w: float | None = None,
                         beta_bounds: tuple | None = None, form: str = "auto",
                         exclusion: float = DEFAULT_EXCLUSION,
                         delta: float = DEFAULT_DELTA) -> AsymptoticExpansion:
    x, y = as_complex(x), as_complex(y)
    _check_order(order)
    a, b, c = p.a, p.b, p.c
    if x == 0 or on_cut(x):
        raise DomainError("joint expansion needs x off 0 and off [1, inf)")
    if is_nonpositive_int(c - b):
        raise DomainError("joint expansion needs c-b off the nonpositive integers")
    if near_int(b, 0.0) or near_int(a - b, 0.0):
        raise DomainError("joint expansion needs b and a-b off the integers")
    beta = -y / x
    if beta == 0:
        raise DomainError("joint expansion needs y != 0")
    if beta_bounds is not None and not (beta_bounds[0] <= abs(beta) <= beta_bounds[1]):
        raise DomainError(f"|beta| = {abs(beta):.6g} outside {beta_bounds}")
    zed = (x - 1) * y / x
    if form == "auto":
        form = "single" if _in_sector(zed, math.pi / 2 - delta) else "three"
    one_mx = 1 - x
    inv = 1 / one_mx
    a_coefs = tuple(co.coeff_a_k(k, p, beta) for k in range(order + 1))
    powers = tuple(inv ** k for k in range(order + 1))
    pre3 = gamma_ratio([c], [a]) * cpow(beta, a - c) * cpow(one_mx, a - b - c) * cmath.exp(y)
    group3 = TermGroup(pre3, "beta^(a-c) (1-x)^(a-b-c) e^y (1-x)^(-k)", a_coefs, powers)
    if form == "single":
        return AsymptoticExpansion((group3,), "(x-1)y/x -> +inf", "joint")
    if form != "three":
        raise DomainError(f"unknown form {form!r}")
    if near_int(a, 0.0):
        raise DomainError("three-family joint expansion needs a off the integers")
    shift = zed - (b - a)
    k_near = round(shift.real)
    if abs(shift - k_near) < exclusion:
        raise DomainError("(x-1)y/x lies inside the exclusion zone around b-a+k")
    if w is None:
        w = default_w(p)
    if w <= 1 + max((a - b).real, (1 - b).real) or not _w_fractions_ok(p, w):
        raise DomainError(f"w = {w} violates the admissibility conditions")
    M = math.floor(w + (b - a).real)
    if M < 1:
        raise DomainError("w gives M < 1")
    common = cmath.exp(-beta) * cpow(one_mx, -a)
    c1 = tuple(pochhammer(a, k) * pochhammer(c - b, k) / (pochhammer(a - b + 1, k) * _fact(k))
               * pfq([1 - b, c - b + k], [c - b, a - b + 1 + k], beta, tol=1e-15).value
               for k in range(M + 1))
    c2 = tuple(pochhammer(a - b, k) * pochhammer(a - c + 1, k) / _fact(k)
               * pfq([c - a, 1 - a - k], [c - a - k, b - a + 1 - k], beta, tol=1e-15).value
               * (-beta) ** (-k) for k in range(M + 1))
    pw = tuple(inv ** k for k in range(M + 1))
    g1 = TermGroup(gamma_ratio([c, b - a], [b, c - a]) * common,
                   "e^(-beta) (1-x)^(-a) (1-x)^(-k)", c1, pw)
    g2 = TermGroup(gamma_ratio([c, a - b], [a, c - a]) * cpow(-beta, b - a) * common,
                   "(-beta)^(b-a) e^(-beta) (1-x)^(-a) (1-x)^(-k)", c2, pw)
    return AsymptoticExpansion((g1, g2, group3), "|arg((1-x)y/x)| < pi, beta bounded", "joint")


def expand_joint_beta(p: Phi1Params, x, y, order: int, w: float | None = None,
                      beta_bounds: tuple | None = None, form: str = "auto",
                      exclusion: float = DEFAULT_EXCLUSION) -> TruncatedValue:
    """x and y large with beta = -y/x bounded.

    ``form`` is "single" (e^y family only), "three" (all families) or "auto",
    which picks "single" when (x-1)y/x points into the right half-plane.
    """
    exp = joint_beta_expansion(p, x, y, order, w, beta_bounds, form, exclusion)
    return exp.truncate()


def joint_lambda_expansion(p: Phi1Params, x, lam, sign_y: int, order: int,
                           delta: float = DEFAULT_DELTA) -> AsymptoticExpansion:
    x, lam = as_complex(x), as_complex(lam)
    _check_order(order)
    _check_euler_params(p, "joint-lambda expansion")
    if x.imag != 0 or x.real <= 0:
        raise DomainError("joint-lambda expansion needs real x > 0")
    if not _in_sector(lam, math.pi / 2 - delta):
        raise DomainError("lambda outside |arg(lambda)| <= pi/2 - delta")
    a, b, c = p.a, p.b, p.c
    if sign_y == 1:
        y = lam * x
        coefs = tuple(co.coeff_a1(k, p, lam) for k in range(order + 1))
        powers = tuple(cpow(y, a - c - k) for k in range(order + 1))
        pre = gamma_ratio([c], [a]) * cpow(x, -b) * cmath.exp(y)
        g = TermGroup(pre, "x^(-b) e^y y^(a-c-k)", coefs, powers)
    elif sign_y == -1:
        coefs = tuple(co.coeff_a2(k, p, lam) for k in range(order + 1))
        powers = tuple(cpow(x, -a - k) for k in range(order + 1))
        g = TermGroup(gamma_ratio([c], [c - a]), "x^(-a-k)", coefs, powers)
    else:
        raise DomainError("sign_y must be +1 or -1")
    return AsymptoticExpansion((g,), "x -> +inf, |arg(lambda)| <= pi/2 - delta", "joint")


def expand_joint_lambda(p: Phi1Params, x, lam, sign_y: int, order: int,
                        delta: float = DEFAULT_DELTA, optimal: bool = False) -> TruncatedValue:
    """Phi_1[a,b;c;-x, sign_y*lambda*x] as x -> +inf with lambda fixed."""
    return _finish(joint_lambda_expansion(p, x, lam, sign_y, order, delta), order, optimal)


def joint_imaginary_expansion(p: Phi1Params, x, lam, order: int) -> AsymptoticExpansion:
    x = as_complex(x)
    lam = _check_lambda(lam)
    _check_order(order)
    _check_euler_params(p, "joint-imaginary expansion")
    if x.imag != 0 or x.real <= 0:
        raise DomainError("joint-imaginary expansion needs real x > 0")
    a, b, c = p.a, p.b, p.c
    il = 1j * lam
    g1 = TermGroup(gamma_ratio([c], [a]) * cpow(x, -b) * cmath.exp(il * x),
                   "x^(-b) e^(i lambda x) (i lambda x)^(a-c-k)",
                   tuple(co.coeff_a1(k, p, il) for k in range(order + 1)),
                   tuple(cpow(il * x, a - c - k) for k in range(order + 1)))
    g2 = TermGroup(gamma_ratio([c], [c - a]), "x^(-a-k)",
                   tuple(co.coeff_a2(k, p, -il) for k in range(order + 1)),
                   tuple(cpow(x, -a - k) for k in range(order + 1)))
    return AsymptoticExpansion((g1, g2), "x -> +inf, y = i lambda x", "joint")


def expand_joint_imaginary(p: Phi1Params, x, lam, order: int,
                           optimal: bool = False) -> TruncatedValue:
    """Phi_1[a,b;c;-x, i*lambda*x] as x -> +inf with real lambda fixed."""
    return _finish(joint_imaginary_expansion(p, x, lam, order), order, optimal)


# -- one variable small, product fixed ---------------------------------------

def eta_large_x_expansion(p: Phi1Params, x, eta, order: int) -> AsymptoticExpansion:
    x, eta = as_complex(x), as_complex(eta)
    _check_order(order)
    a, b, c = p.a, p.b, p.c
    if near_int(a - b, 0.0):
        raise DomainError("eta-x expansion needs a-b not an integer")
    if x.imag == 0 and x.real >= 0:
        raise DomainError("eta-x expansion needs |arg(-x)| < pi")
    if order + 1 < max(1.0, abs(a), abs(b)):
        raise DomainError("eta-x expansion needs order + 1 >= max{1, |a|, |b|}")
    if is_nonpositive_int(c - b):
        raise DomainError("eta-x expansion needs c-b off the nonpositive integers")
    powers = tuple(x ** (-k) for k in range(order + 1))
    g1 = TermGroup(gamma_ratio([c, b - a], [b, c - a]) * cpow(-x, -a), "(-x)^(-a) x^(-k)",
                   tuple(co.coeff_b1(k, p, eta) for k in range(order + 1)), powers)
    g2 = TermGroup(gamma_ratio([c, a - b], [a, c - b]) * cpow(-x, -b), "(-x)^(-b) x^(-k)",
                   tuple(co.coeff_b2(k, p, eta) for k in range(order + 1)), powers)
    return AsymptoticExpansion((g1, g2), "|arg(-x)| < pi, eta = xy bounded", "eta")


def expand_eta_large_x(p: Phi1Params, x, eta, order: int,
                       optimal: bool = False) -> TruncatedValue:
    """Phi_1(x, eta/x) as x -> infinity with eta fixed."""
    return _finish(eta_large_x_expansion(p, x, eta, order), order, optimal)


def eta_large_y_expansion(p: Phi1Params, y, eta, order: int, direction: str,
                          exclusion: float = DEFAULT_EXCLUSION,
                          delta: float = DEFAULT_DELTA) -> AsymptoticExpansion:
    y, eta = as_complex(y), as_complex(eta)
    _check_order(order)
    a, c = p.a, p.c
    if is_nonpositive_int(a) or is_nonpositive_int(c - a):
        raise DomainError("eta-y expansion needs a and c-a off the nonpositive integers")
    if order + 1 < max(1.0, abs(a), abs(a - c)):
        raise DomainError("eta-y expansion needs order + 1 >= max{1, |a|, |a-c|}")
    x = eta / y
    _check_x(x)
    powers = tuple(y ** (-k) for k in range(order + 1))
    g2 = TermGroup(gamma_ratio([c], [a]) * cpow(y, a - c) * cmath.exp(y), "y^(a-c) e^y y^(-k)",
                   tuple(co.coeff_c2(k, p, eta) for k in range(order + 1)), powers)
    if direction == "right":
        if not _in_sector(y, math.pi / 2 - delta):
            raise DomainError("right direction needs |arg(y)| <= pi/2 - delta")
        return AsymptoticExpansion((g2,), "y -> +inf, eta = xy bounded", "eta")
    if direction != "left":
        raise DomainError("direction must be 'left' or 'right'")
    if y.imag == 0 and y.real >= 0:
        raise DomainError("left direction needs |arg(-y)| < pi")
    ell = max(0, round((y - a).real))
    if abs(y - (a + ell)) < exclusion:
        raise DomainError("y lies inside the exclusion zone around a + l")
    g1 = TermGroup(gamma_ratio([c], [c - a]) * cpow(-y, -a), "(-y)^(-a) y^(-k)",
                   tuple(co.coeff_c1(k, p, eta) for k in range(order + 1)), powers)
    return AsymptoticExpansion((g1, g2), "|arg(-y)| < pi, eta = xy bounded", "eta")


def expand_eta_large_y(p: Phi1Params, y, eta, order: int, direction: str = "left",
                       exclusion: float = DEFAULT_EXCLUSION,
                       optimal: bool = False) -> TruncatedValue:
    """Phi_1(eta/y, y) as y -> infinity with eta fixed."""
    return _finish(eta_large_y_expansion(p, y, eta, order, direction, exclusion), order, optimal)


# -- x -> 1 with c = a + b ---------------------------------------------------

def phi1_x_to_1_log(a, b, y, rho) -> complex:
    """Leading model of Phi_1[a,b;a+b;1-rho,y] as rho -> 0 (no o(1) term)."""
    a, b, y, rho = (as_complex(t) for t in (a, b, y, rho))
    if is_nonpositive_int(a) or is_nonpositive_int(b):
        raise PoleError("phi1_x_to_1_log needs a, b off the nonpositive integers")
    if is_nonpositive_int(a + b):
        raise PoleError("phi1_x_to_1_log needs a+b off the nonpositive integers")
    if rho == 0 or (rho.imag == 0 and rho.real < 0):
        raise DomainError("rho must satisfy |arg(rho)| < pi")
    pre = gamma_ratio([a + b], [a, b])
    bracket = cmath.exp(y) * (2 * EULER_GAMMA + digamma(a) + digamma(b) + cmath.log(rho))
    if y != 0:
        bracket += y / a * co.kdf_01_21(a, y, y, tol=1e-16).value
    return -pre * bracket
