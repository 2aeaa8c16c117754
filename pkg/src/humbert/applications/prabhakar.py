"""Fractional integral operators with Phi_1 kernels on (0, x)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import DomainError, PoleError
from ..evaluator import evaluate, evaluate_many
from ..quadrature import adaptive
from ..reference import phi1_connection_in_w
from ..special.gamma import cpow, gamma_ratio, pochhammer, rgamma
from ..special.hyper import pfq
from ..types import Phi1Params, SeriesResult, as_complex, is_nonpositive_int, near_int


@dataclass(frozen=True)
class PrabhakarParams:
    alpha: complex
    beta: complex
    gamma_: complex
    lambda_: complex
    b_end: float = 1.0

    def __post_init__(self):
        for f in ("alpha", "beta", "gamma_", "lambda_"):
            object.__setattr__(self, f, as_complex(getattr(self, f)))
        if self.gamma_.real <= 0:
            raise DomainError("Re(gamma) must be positive")
        if not self.b_end > 0:
            raise DomainError("b_end must be positive")

    @property
    def kernel(self) -> Phi1Params:
        return Phi1Params(self.alpha, self.beta, self.gamma_)


def _check_x(pp: PrabhakarParams, x: float):
    if not (0 < x <= pp.b_end):
        raise DomainError(f"x must lie in (0, {pp.b_end}]")


def prabhakar_plus_power(pp: PrabhakarParams, rho, x: float) -> complex:
    """A+ applied to t^rho, in closed form through a 2F2."""
    rho = as_complex(rho)
    _check_x(pp, x)
    al, be, ga, la = pp.alpha, pp.beta, pp.gamma_, pp.lambda_
    if rho.real <= -min(al.real, be.real) - 1:
        raise DomainError("A+ t^rho needs Re(rho) > -min(Re alpha, Re beta) - 1")
    pre = gamma_ratio([rho + al + 1, rho + be + 1], [rho + ga + 1, rho + al + be + 1])
    f = pfq([al, rho + al + 1], [rho + ga + 1, rho + al + be + 1], la * x, tol=1e-15).value
    return pre * cpow(x, rho + ga) * f


def prabhakar_minus_power(pp: PrabhakarParams, rho, x: float) -> complex:
    """A- applied to t^rho, in closed form through a 1F1."""
    rho = as_complex(rho)
    _check_x(pp, x)
    al, be, ga, la = pp.alpha, pp.beta, pp.gamma_, pp.lambda_
    if rho.real <= max((al + be - ga).real, 0.0) - 1:
        raise DomainError("A- t^rho needs Re(rho) > max(Re(alpha+beta-gamma), 0) - 1")
    pre = gamma_ratio([rho + 1, rho + ga - al - be + 1], [rho + ga - al + 1, rho + ga - be + 1])
    f = pfq([al], [rho + ga - be + 1], la * x, tol=1e-15).value
    return pre * cpow(x, rho + ga) * f


def phi1_kernel_bound(p: Phi1Params, x_arg: float, side: str) -> float:
    """Unit-constant envelope for |Phi_1| on the two kernel ranges.

    ``near-one``: (1-x)^min{0, Re(c-a-b)} for x in [0, 1).
    ``large-negative``: x^-min{Re a, Re b} for the argument -x with x > 1, else 1.
    """
    a, b, c = p.a, p.b, p.c
    if side == "near-one":
        if near_int(a + b - c, 0.0):
            raise DomainError("near-one bound needs a+b-c not an integer")
        if not (0 <= x_arg < 1):
            raise DomainError("near-one bound needs x in [0, 1)")
        return (1.0 - x_arg) ** min(0.0, (c - a - b).real)
    if side == "large-negative":
        if near_int(a - b, 0.0):
            raise DomainError("large-negative bound needs a-b not an integer")
        if x_arg < 0:
            raise DomainError("large-negative bound needs x >= 0")
        return x_arg ** -min(a.real, b.real) if x_arg > 1 else 1.0
    raise DomainError("side must be 'near-one' or 'large-negative'")


def kernel_bound_constant(p: Phi1Params, xs: Sequence[float], y, side: str) -> float:
    """Smallest C with |Phi_1| <= C * envelope on the given grid."""
    y = as_complex(y)
    worst = 0.0
    for x in xs:
        arg = x if side == "near-one" else -x
        v = abs(evaluate(p, arg, y).value)
        worst = max(worst, v / phi1_kernel_bound(p, x, side))
    return worst


def _call(f: Callable, t: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(f(t), dtype=complex)
        if out.shape == t.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([complex(f(float(ti))) for ti in t])


_W_SPLIT = 1e-3
_TINY = 1e-300


def prabhakar_apply(pp: PrabhakarParams, f: Callable, x: float, side: str = "plus",
                    origin_exponent: float = 0.0, rtol: float = 1e-10) -> SeriesResult:
    """Quadrature of the A+ (side="plus") or A- (side="minus") operator at x.

    ``origin_exponent`` declares the power behaviour of f at t = 0. The range
    is split at x/2; each half gets a power substitution that removes its
    endpoint singularity.
    """
    _check_x(pp, x)
    if side not in ("plus", "minus"):
        raise DomainError("side must be 'plus' or 'minus'")
    al, be, ga, la = pp.alpha, pp.beta, pp.gamma_, pp.lambda_
    kern = pp.kernel
    # kernel growth at t -> 0 from the envelope: x/t -> inf or 1 - t/x -> 1
    if side == "plus":
        kernel_power = min(al.real, be.real)
    else:
        kernel_power = min(0.0, (ga - al - be).real)
    left_power = origin_exponent + kernel_power
    if left_power <= -1:
        raise DomainError("integrand is not integrable at t = 0")
    scale = complex(rgamma(ga))

    by_w = side == "minus" and not near_int(al + be - ga, 1e-12) and not is_nonpositive_int(ga - be)

    def integrand(t):
        if side == "plus":
            k = evaluate_many(kern, 1.0 - x / t, la * (x - t), tol=1e-13)
        else:
            # 1 - t/x loses the digits of t/x once it is below ~1e-3
            small = t < _W_SPLIT * x if by_w else np.zeros(t.shape, dtype=bool)
            k = np.empty(t.shape, dtype=complex)
            k[~small] = evaluate_many(kern, 1.0 - t[~small] / x, la * (x - t[~small]), tol=1e-13)
            for i in np.flatnonzero(small):
                k[i] = phi1_connection_in_w(kern, t[i] / x, la * (x - t[i]), 1e-13).value
        return k * _call(f, t)

    h = 0.5 * x
    s0 = min(1.0, left_power + 1.0)
    s1 = min(1.0, ga.real)

    def near_zero(u):
        t = np.maximum(h * u ** (1.0 / s0), _TINY)
        return integrand(t) * np.exp((ga - 1.0) * np.log(x - t)) * h / s0 * u ** (1.0 / s0 - 1.0)

    def near_x(v):
        # (x-t)^(gamma-1) merged with the Jacobian, so d may underflow safely
        d = h * v ** (1.0 / s1)
        return integrand(x - d) * h ** ga / s1 * np.exp((ga / s1 - 1.0) * np.log(v))

    r0 = adaptive(near_zero, 0.0, 1.0, rtol=rtol)
    r1 = adaptive(near_x, 0.0, 1.0, rtol=rtol)
    val = scale * (r0.value + r1.value)
    err = abs(scale) * (r0.abs_error_estimate + r1.abs_error_estimate)
    return SeriesResult(val, err, r0.terms_used + r1.terms_used, r0.converged and r1.converged)


def _expansion(prefactor: complex, rho: complex, ga: complex, coeffs: list) -> list:
    return [(rho + ga + n, prefactor * s) for n, s in enumerate(coeffs)]


def prabhakar_plus_asym(pp: PrabhakarParams, rho, a_coeffs: Sequence, order: int) -> list:
    """Small-x expansion of A+ f for f ~ sum a_k t^(rho+k): list of (exponent, coefficient)."""
    rho = as_complex(rho)
    al, be, ga, la = pp.alpha, pp.beta, pp.gamma_, pp.lambda_
    if near_int(al - be, 0.0):
        raise PoleError("A+ expansion needs alpha-beta not an integer")
    if rho.real <= -min(al.real, be.real) - 1:
        raise DomainError("A+ expansion needs Re(rho) > -min(Re alpha, Re beta) - 1")
    a = [as_complex(v) for v in a_coeffs] + [0j] * (order + 1)
    sig = []
    for n in range(order + 1):
        s = 0j
        for k in range(n + 1):
            s += a[k] * pochhammer(rho + be + 1, k) * pochhammer(al, n - k) / math.factorial(n - k) \
                * la ** (n - k)
        den = pochhammer(rho + ga + 1, n) * pochhammer(rho + al + be + 1, n)
        if den == 0:
            raise PoleError("A+ expansion coefficient hits a denominator zero")
        sig.append(pochhammer(rho + al + 1, n) / den * s)
    pre = gamma_ratio([rho + al + 1, rho + be + 1], [rho + ga + 1, rho + al + be + 1])
    return _expansion(pre, rho, ga, sig)


def prabhakar_minus_asym(pp: PrabhakarParams, rho, a_coeffs: Sequence, order: int) -> list:
    """Small-x expansion of A- f for f ~ sum a_k t^(rho+k): list of (exponent, coefficient)."""
    rho = as_complex(rho)
    al, be, ga, la = pp.alpha, pp.beta, pp.gamma_, pp.lambda_
    if near_int(al + be - ga, 0.0):
        raise PoleError("A- expansion needs alpha+beta-gamma not an integer")
    if rho.real <= max((al + be - ga).real, 0.0) - 1:
        raise DomainError("A- expansion needs Re(rho) > max(Re(alpha+beta-gamma), 0) - 1")
    a = [as_complex(v) for v in a_coeffs] + [0j] * (order + 1)
    tau = []
    for n in range(order + 1):
        s = 0j
        for k in range(n + 1):
            den = pochhammer(rho + ga - al + 1, k)
            if den == 0:
                raise PoleError("A- expansion coefficient hits a denominator zero")
            s += (a[k] * pochhammer(rho + 1, k) * pochhammer(rho + ga - al - be + 1, k) / den
                  * pochhammer(al, n - k) / math.factorial(n - k) * la ** (n - k))
        d = pochhammer(rho + ga - be + 1, n)
        if d == 0:
            raise PoleError("A- expansion coefficient hits a denominator zero")
        tau.append(s / d)
    pre = gamma_ratio([rho + 1, rho + ga - al - be + 1], [rho + ga - al + 1, rho + ga - be + 1])
    return _expansion(pre, rho, ga, tau)


def evaluate_expansion(terms: list, x: float) -> complex:
    return sum((c * cpow(x, e) for e, c in terms), 0j)
