"""The twelve acceptance criteria, one test each, with a PASS/FAIL line per criterion."""
import cmath
import math

import mpmath as mp
import pytest

from humbert import asymptotic as asy
from humbert import reference as ref
from humbert.applications import (
    PrabhakarParams, evaluate_expansion, glauber_c0, glauber_equilibrium_limit,
    glauber_zero_temperature, prabhakar_apply, prabhakar_minus_asym, prabhakar_minus_power,
    prabhakar_plus_asym, prabhakar_plus_power,
)
from humbert.applications.glauber import GlauberPoint
from humbert.asymptotic import coefficients as co
from humbert.saran import FmParams, fm_laplace, fm_series
from humbert.special.kummer import erfc
from humbert.types import Phi1Params

import test_coefficients as tc
from conftest import random_params, rel
from test_applications import _draw
from test_saran import brute

P = Phi1Params(0.5, 1.0, 1.5)


@pytest.fixture
def verdict(capsys):
    def report(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}")
        assert ok, detail
    return report


def _disc(rng, radius):
    return radius * math.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))


def test_c01_convergent_oracles(rng, verdict):
    worst_s, worst_e, n_e = 0.0, 0.0, 0
    for _ in range(100):
        a, b, c = random_params(rng)
        p = Phi1Params(a, b, c)
        x, y = _disc(rng, 0.8), _disc(rng, 3.0)
        t = ref.phi1_taylor(p, x, y, tol=1e-14).value
        s = ref.phi1_series_2f1(p, x, y, tol=1e-14).value
        worst_s = max(worst_s, rel(t, s))
        if c.real > a.real > 0:
            worst_e = max(worst_e, rel(ref.phi1_euler_integral(p, x, y, rtol=1e-12).value, s))
            n_e += 1
    ok = worst_s <= 1e-10 and worst_e <= 1e-8 and n_e > 0
    verdict(1, ok, f"taylor/series max rel {worst_s:.2e}; euler max rel {worst_e:.2e} on {n_e} points")


def test_c02_kummer_identity(rng, verdict):
    worst, n = 0.0, 0
    while n < 100:
        p = Phi1Params(*random_params(rng))
        x, y = _disc(rng, 0.8), _disc(rng, 3.0)
        if x.real >= 0.5:
            continue
        q, x1, y1, pref = ref.kummer_transform(p, x, y)
        lhs = ref.phi1_series_2f1(p, x, y, tol=1e-14, kummer=False).value
        rhs = pref * ref.phi1_series_2f1(q, x1, y1, tol=1e-14, kummer=False).value
        worst = max(worst, rel(rhs, lhs))
        n += 1
    verdict(2, worst <= 1e-10, f"max relative residual {worst:.2e} on {n} points")


def test_c03_large_x(verdict):
    errs = []
    for k in range(4):
        x = -10.0 * 2 ** k
        got = asy.expand_large_x(P, x, 1.0, 8).value
        errs.append(rel(got, ref.phi1_series_2f1(P, x, 1.0, tol=1e-15).value))
    ok = max(errs) <= 1e-6 and all(e1 > e2 for e1, e2 in zip(errs, errs[1:]))
    verdict(3, ok, "relative errors " + ", ".join(f"{e:.2e}" for e in errs))


def test_c04_large_y_right(verdict):
    want = ref.phi1_series_2f1(P, 0.3, 35.0, tol=1e-15).value
    err = rel(asy.expand_large_y_right(P, 0.3, 35.0, 6).value, want)
    lead = rel(asy.expand_large_y_right(P, 0.3, 35.0, 0).value, want)
    verdict(4, err <= 1e-7 and lead <= 0.15, f"order-6 rel {err:.2e}; leading term rel {lead:.3f}")


def test_c05_imaginary_axis(verdict):
    # the 2F1 series cancels at y = 60i, so the Euler integral is the oracle here
    want = ref.phi1_euler_integral(P, 0.4, 60j, rtol=1e-14).value
    exp = asy.imaginary_y_expansion(P, 0.4, 60.0, 5)
    full = abs(exp.truncate(5).value - want)
    alone = [abs(g.partial_sum(5) - want) for g in exp.terms]
    ok = full <= 1e-5 and len(alone) == 2 and min(alone) >= 10 * full
    verdict(5, ok, f"abs error {full:.2e}; single-family errors "
                   + ", ".join(f"{e:.2e}" for e in alone))


def test_c06_eta_regime(verdict):
    errs = {
        "large-x": rel(asy.expand_eta_large_x(P, -50.0, 1.5, 5).value,
                       ref.phi1_series_2f1(P, -50.0, 1.5 / -50.0, tol=1e-15).value),
        "large-y right": rel(asy.expand_eta_large_y(P, 50.0, 1.5, 5, "right").value,
                             ref.phi1_series_2f1(P, 1.5 / 50.0, 50.0, tol=1e-15).value),
        "large-y left": rel(asy.expand_eta_large_y(P, -50.0, 1.5, 5, "left").value,
                            ref.phi1_series_2f1(P, -1.5 / 50.0, -50.0, tol=1e-15).value),
    }
    eta = complex(tc.ETA)
    with mp.workdps(30):
        oracles = {"b1": (co.coeff_b1, tc.eta_x_first()), "b2": (co.coeff_b2, tc.eta_x_second()),
                   "c1": (co.coeff_c1, tc.eta_y_first()), "c2": (co.coeff_c2, tc.eta_y_second())}
    coeff_worst = max(rel(fn(k, tc.PARAMS, eta), complex(want[k]))
                      for fn, want in oracles.values() for k in range(tc.KMAX + 1))
    ok = max(errs.values()) <= 1e-6 and coeff_worst <= 1e-13
    verdict(6, ok, "; ".join(f"{k} rel {v:.2e}" for k, v in errs.items())
            + f"; coefficients k<=6 max rel {coeff_worst:.2e}")


def test_c07_log_model(verdict):
    p = Phi1Params(0.5, 0.75, 1.25)
    dev = [abs(ref.phi1_series_2f1(p, 1 - rho, 0.6, tol=1e-15).value
               - asy.phi1_x_to_1_log(0.5, 0.75, 0.6, rho)) for rho in (1e-2, 1e-3, 1e-4)]
    ok = dev[0] > dev[1] > dev[2]
    verdict(7, ok, "deviations " + ", ".join(f"{d:.2e}" for d in dev))


def test_c08_minus_one_summation(verdict):
    p = Phi1Params(1.0, 0.5, 1.5)
    worst = 0.0
    for y in (0.0, 0.8, -0.8, 2.0):
        lhs = ref.phi1_series_2f1(p, -1.0, y, tol=1e-15).value
        worst = max(worst, rel(ref.phi1_kummer_value(1.0, 0.5, y).value, lhs))
    verdict(8, worst <= 1e-10, f"max relative delta {worst:.2e}")


def test_c09_glauber_zero_temperature(rng, verdict):
    worst = 0.0
    for _ in range(20):
        s, tau = 10 ** rng.uniform(-2, 3), 10 ** rng.uniform(-2, 3)
        arctan = 2 / math.pi * math.atan(math.sqrt(2 * s / tau))
        worst = max(worst, abs(glauber_c0(GlauberPoint(s, tau, 0.0)) - arctan))
        assert abs(glauber_zero_temperature(s, tau) - arctan) < 1e-15
    half = abs(glauber_c0(GlauberPoint(1.0, 2.0, 0.0)) - 0.5)
    verdict(9, worst <= 1e-10 and half <= 1e-12, f"max deviation {worst:.2e}; at 2s/tau=1 {half:.2e}")


def test_c10_glauber_equilibrium(verdict):
    # tau_eq = 2/mu^2 = tau = 2000
    tau, mu = 2000.0, math.sqrt(1e-3)
    target = complex(erfc(1.0)).real
    assert abs(glauber_equilibrium_limit(1.0) - target) < 1e-15
    gaps = [abs(glauber_c0(GlauberPoint(s, tau, mu)) - target) for s in (1e2, 1e3, 1e4)]
    ok = gaps[0] > gaps[1] > gaps[2] and gaps[2] <= 1e-2
    verdict(10, ok, "gaps to erfc(1) " + ", ".join(f"{g:.2e}" for g in gaps))


def test_c11_prabhakar(rng, verdict):
    worst = 0.0
    for _ in range(20):
        pp, rho, x = _draw(rng)
        for side, closed in (("plus", prabhakar_plus_power), ("minus", prabhakar_minus_power)):
            q = prabhakar_apply(pp, lambda t: t ** rho, x, side, origin_exponent=rho)
            worst = max(worst, rel(closed(pp, rho, x), q.value))
    pp, rho = PrabhakarParams(0.3, 0.7, 1.2, 0.3), 0.5
    f = lambda t: t ** rho * (1 + t)
    asym = {}
    for side, fn in (("plus", prabhakar_plus_asym), ("minus", prabhakar_minus_asym)):
        q = prabhakar_apply(pp, f, 1e-3, side, origin_exponent=rho).value
        asym[side] = rel(evaluate_expansion(fn(pp, rho, [1, 1], 3), 1e-3), q)
    ok = worst <= 1e-6 and max(asym.values()) <= 1e-4
    verdict(11, ok, f"closed forms max rel {worst:.2e}; order-3 expansions rel "
                    + ", ".join(f"{k} {v:.2e}" for k, v in asym.items()))


def test_c12_fm(rng, verdict):
    q = FmParams(0.5, 0.5, 0.25, 0.75, 1.5, 1.25)
    worst_s, worst_l = 0.0, 0.0
    for _ in range(10):
        x, y, z = (_disc(rng, 0.15) for _ in range(3))
        s = fm_series(q, x, y, z, tol=1e-14).value
        worst_s = max(worst_s, rel(s, brute(q, x, y, z)))
        worst_l = max(worst_l, rel(fm_laplace(q, x, y, z).value, s))
    ok = worst_s <= 1e-9 and worst_l <= 1e-7
    verdict(12, ok, f"series vs triple sum max rel {worst_s:.2e}; laplace vs series max rel {worst_l:.2e}")
