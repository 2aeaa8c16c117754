import cmath
import math

import mpmath as mp
import pytest

from humbert import asymptotic as asy
from humbert import reference as ref
from humbert.asymptotic import coefficients as co
from humbert.errors import DomainError
from humbert.special.gamma import EULER_GAMMA, digamma, gamma, gamma_ratio
from humbert.special.hyper import hyp1f1, hyp2f1
from humbert.special.kummer import kummer_u
from humbert.types import Phi1Params

from conftest import rel

P = Phi1Params(0.5, 1.0, 1.5)
Q = Phi1Params(0.5, 0.25, 1.25)


def series(p, x, y):
    return ref.phi1_series_2f1(p, x, y, tol=1e-15).value


def euler(p, x, y):
    return ref.phi1_euler_integral(p, x, y, rtol=1e-14).value


class TestOptimalTruncation:
    def test_monotone(self):
        assert asy.optimal_truncation([5, 4, 3, 2, 1]) == 4

    def test_first_minimum(self):
        assert asy.optimal_truncation([1, 0.1, 0.3]) == 1

    def test_ties_continue(self):
        assert asy.optimal_truncation([1, 0.5, 0.5, 0.7]) == 2

    def test_right_expansion_at_20(self):
        exp = asy.large_y_right_expansion(P, 0.3, 20, 40)
        idx = asy.optimal_truncation([abs(t) for t in exp.combined_terms()])
        want = series(P, 0.3, 20)
        err = abs(exp.truncate(idx).value - want)
        assert err <= abs(exp.truncate(idx + 2).value - want)
        opt = asy.expand_large_y_right(P, 0.3, 20, 40, optimal=True)
        assert opt.terms_used == idx


class TestLargeX:
    def test_y_zero_is_gauss_connection(self):
        for x in (-8.0, -30.0, -5 + 4j):
            got = asy.expand_large_x(P, x, 0, 30).value
            assert rel(got, hyp2f1(0.5, 1, 1.5, x).value) < 1e-12

    def test_against_series(self):
        assert rel(asy.expand_large_x(P, -20, 0.5, 8).value, series(P, -20, 0.5)) < 1e-8

    def test_order_sequence(self):
        want = series(P, -50, 1)
        errs = [abs(asy.expand_large_x(P, -50, 1, n).value - want) for n in range(2, 9)]
        assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:]))

    def test_integer_difference(self):
        with pytest.raises(DomainError):
            asy.expand_large_x(Phi1Params(0.5, 1.5, 2.2), -20, 0.5, 4)

    def test_small_x(self):
        with pytest.raises(DomainError):
            asy.expand_large_x(P, -0.5, 0.5, 4)

    def test_integer_c_minus_b(self):
        p = Phi1Params(0.3, 0.8, 2.8)
        assert rel(asy.expand_large_x(p, -40, 0.7, 12).value, series(p, -40, 0.7)) < 1e-12

    def test_truncation_bookkeeping(self):
        t = asy.expand_large_x(P, -20, 0.5, 5)
        assert t.terms_used <= 5 and t.last_term_modulus > 0


class TestLargeYLeft:
    def test_x_zero_classical(self):
        a, c, y = 0.5, 1.5, -30.0
        want = sum(gamma_ratio([c], [c - a]) * (-y) ** (-a - n) * complex(mp.rf(a, n) * mp.rf(a - c + 1, n))
                   / math.factorial(n) for n in range(7))
        assert rel(asy.expand_large_y_left(P, 0, y, 6).value, want) < 1e-14

    def test_against_series(self):
        assert rel(asy.expand_large_y_left(P, 0.3, -40, 6).value, series(P, 0.3, -40)) < 1e-7

    def test_leading(self):
        got = asy.expand_large_y_left(P, 0.3, -40, 0).value
        assert rel(got, gamma_ratio([1.5], [1.0]) * 40 ** -0.5) < 1e-14

    def test_sector(self):
        with pytest.raises(DomainError):
            asy.expand_large_y_left(P, 0.3, 40, 4)


class TestLargeYRight:
    def test_leading(self):
        y = 35.0
        lead = gamma_ratio([1.5], [0.5]) * 0.7 ** -1 * y ** -1 * cmath.exp(y)
        assert rel(asy.expand_large_y_right(P, 0.3, y, 0).value, lead) < 1e-14
        assert rel(lead, series(P, 0.3, y)) < 0.15

    def test_against_series(self):
        assert rel(asy.expand_large_y_right(P, 0.3, 35, 6).value, series(P, 0.3, 35)) < 1e-7

    def test_x_zero_classical(self):
        a, c, y = 0.5, 1.5, 30.0
        want = sum(gamma_ratio([c], [a]) * cmath.exp(y) * y ** (a - c - n)
                   * complex(mp.rf(1 - a, n) * mp.rf(c - a, n)) / math.factorial(n) for n in range(7))
        assert rel(asy.expand_large_y_right(P, 0, y, 6).value, want) < 1e-14

    def test_sector(self):
        with pytest.raises(DomainError):
            asy.expand_large_y_right(P, 0.3, -35, 4)


class TestImaginary:
    def test_leading_pair(self):
        x, lam = 0.4, 60.0
        lead = (gamma_ratio([1.5], [1.0]) * (-1j * lam) ** -0.5
                + gamma_ratio([1.5], [0.5]) * (1 - x) ** -1 * (1j * lam) ** -1 * cmath.exp(1j * lam))
        assert rel(asy.expand_imaginary_y(P, x, lam, 0).value, lead) < 1e-14

    def test_against_series(self):
        # the 2F1 series cancels catastrophically at y = 60i; the Euler integral does not
        assert not ref.phi1_series_2f1(P, 0.4, 60j).converged
        assert abs(asy.expand_imaginary_y(P, 0.4, 60, 5).value - euler(P, 0.4, 60j)) < 1e-6

    def test_x_zero_classical(self):
        lam = 50.0
        with mp.workdps(30):
            want = complex(mp.hyp1f1(0.5, 1.5, 1j * lam))
        assert rel(asy.expand_imaginary_y(P, 0, lam, 8).value, want) < 1e-9

    def test_both_families_needed(self):
        exp = asy.imaginary_y_expansion(P, 0.4, 60, 5)
        want = euler(P, 0.4, 60j)
        full = abs(exp.truncate(5).value - want)
        for g in exp.terms:
            alone = abs(g.partial_sum(5) - want)
            assert alone >= 10 * full

    def test_parameter_constraint(self):
        with pytest.raises(DomainError):
            asy.expand_imaginary_y(Phi1Params(1.5, 1, 1.2), 0.4, 60, 3)


class TestShiftedImaginary:
    def test_zero_shift(self):
        for n in range(5):
            a = asy.shifted_imaginary_y_expansion(P, 0.3, 0, 60, n)
            b = asy.imaginary_y_expansion(P, 0.3, 60, n)
            for ga, gb in zip(a.terms, b.terms):
                for k in range(n + 1):
                    assert abs(ga.term(k) - gb.term(k)) <= 1e-15 * max(1e-300, abs(gb.term(k))) * 10
        assert rel(asy.expand_shifted_imaginary_y(P, 0.3, 0, 60, 4).value,
                   asy.expand_imaginary_y(P, 0.3, 60, 4).value) < 1e-14

    def test_against_series(self):
        got = asy.expand_shifted_imaginary_y(P, 0.3, 1, 60, 4).value
        assert rel(got, euler(P, 0.3, 1 + 60j)) < 1e-5

    def test_leading_coefficients(self):
        exp = asy.shifted_imaginary_y_expansion(P, 0.3, 1.0, 60, 3)
        for g in exp.terms:
            assert g.coefficients[0] == 1


class TestJointBeta:
    def test_single_family_overlap(self):
        got = asy.expand_joint_beta(Q, -30, 21, 5).value
        want = asy.expand_large_x(Q, -30, 21, 40).value
        assert rel(want, series(Q, -30, 21)) < 1e-10
        assert rel(got, want) < 1e-5

    def test_a1_collapse(self):
        a, b, c = 0.5, 0.25, 1.25
        beta = 0.7
        lhs = co.two_f_two(1 - b, c - b, c - b, a - b + 1, beta)
        assert rel(lhs, hyp1f1(1 - b, a - b + 1, beta).value) < 1e-14

    def test_leading_single(self):
        x, y = -30.0, 21.0
        beta = -y / x
        lead = gamma_ratio([1.25], [0.5]) * beta ** -0.75 * (1 - x) ** (0.5 - 0.25 - 1.25) * cmath.exp(y)
        assert rel(asy.expand_joint_beta(Q, x, y, 0, form="single").value, lead) < 1e-14

    @pytest.mark.parametrize("y,order,tol", [(-21 + 10j, 5, 1e-4), (-15 + 25j, 5, 1e-4), (5 + 25j, 5, 1e-6)])
    def test_three_families(self, y, order, tol):
        got = asy.expand_joint_beta(Q, -30, y, order, form="three").value
        assert rel(got, euler(Q, -30, y)) < tol

    def test_exclusion_zone(self):
        with pytest.raises(DomainError):
            asy.expand_joint_beta(Q, -30, 21, 4, form="three")

    def test_beta_bounds(self):
        with pytest.raises(DomainError):
            asy.expand_joint_beta(Q, -30, 21, 4, beta_bounds=(0.1, 0.5))

    def test_default_w(self):
        w = asy.default_w(Q)
        assert w >= 1.5 + max(0.25, 0.75)
        assert (w - 1.75) % 0.25 == 0


class TestJointLambda:
    def test_a1_leading(self):
        assert co.coeff_a1(0, P, 0.8) == 1

    def test_minus_order_zero(self):
        got = asy.expand_joint_lambda(P, 200, 1, -1, 0).value
        want = gamma(1.5) * kummer_u(0.5, 0.5, 1) * 200 ** -0.5
        assert rel(got, want) < 1e-14
        assert rel(got, series(P, -200, -200)) < 1e-12

    def test_plus_order_four(self):
        got = asy.expand_joint_lambda(P, 50, 0.8, 1, 4).value
        assert rel(got, series(P, -50, 40)) < 1e-6

    def test_plus_converges_with_order(self):
        want = series(P, -50, 40)
        errs = [rel(asy.expand_joint_lambda(P, 50, 0.8, 1, n).value, want) for n in range(7)]
        assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:]))
        assert errs[5] < 1e-6

    def test_sector(self):
        with pytest.raises(DomainError):
            asy.expand_joint_lambda(P, 50, -0.8, 1, 3)
        with pytest.raises(DomainError):
            asy.expand_joint_lambda(P, -50, 0.8, 1, 3)


class TestJointImaginary:
    def test_structure(self):
        lam = 1.3
        exp = asy.joint_imaginary_expansion(P, 80, lam, 4)
        g1, g2 = exp.terms
        for k in range(5):
            assert g1.coefficients[k] == co.coeff_a1(k, P, 1j * lam)
            assert g2.coefficients[k] == co.coeff_a2(k, P, -1j * lam)

    def test_against_series(self):
        got = asy.expand_joint_imaginary(P, 80, 1.0, 4).value
        assert rel(got, euler(P, -80, 80j)) < 1e-5

    def test_u_on_rotated_ray(self):
        # integrate along t e^{i theta} so the exponential decays for z near arg -pi/2
        a, b, eps = 1.5, 1.5, 1e-3
        z = 2.0 * cmath.exp(-1j * (math.pi / 2 - eps))
        theta = math.pi / 4
        with mp.workdps(25):
            e = mp.expj(theta)
            f = lambda s: (s * e) ** (a - 1) * (1 + s * e) ** (b - a - 1) * mp.exp(-z * s * e) * e
            want = complex(mp.quad(f, [0, 1, 10, mp.inf]) / mp.gamma(a))
        assert rel(kummer_u(a, b, z), want) < 1e-10


class TestEta:
    def test_eta_zero(self):
        exp = asy.eta_large_x_expansion(Q, -40, 0, 6)
        assert rel(exp.truncate().value, asy.expand_large_x(Q, -40, 0, 6).value) < 1e-14

    def test_eta_x_against_series(self):
        got = asy.expand_eta_large_x(Q, -60, 2, 6).value
        assert rel(got, series(Q, -60, -2 / 60)) < 1e-8

    def test_eta_y_right(self):
        got = asy.expand_eta_large_y(P, 50, 1.5, 5, "right").value
        assert rel(got, series(P, 1.5 / 50, 50)) < 1e-7

    def test_eta_y_left(self):
        got = asy.expand_eta_large_y(P, -50, 1.5, 5, "left").value
        assert rel(got, series(P, -1.5 / 50, -50)) < 1e-7

    def test_exclusion(self):
        with pytest.raises(DomainError):
            asy.expand_eta_large_y(P, 10.55 + 0.01j, 1.5, 5, "left")

    def test_order_floor(self):
        with pytest.raises(DomainError):
            asy.expand_eta_large_x(Phi1Params(3.5, 0.25, 4.25), -60, 2, 1)

    def test_matches_large_x(self):
        x, y = -60.0, -2 / 60
        e1 = asy.expand_eta_large_x(Q, x, x * y, 6)
        e2 = asy.expand_large_x(Q, x, y, 6)
        assert abs(e1.value - e2.value) <= 2 * max(e1.last_term_modulus, e2.last_term_modulus)


class TestLogModel:
    def test_y_zero(self):
        a, b, rho = 0.5, 0.75, 1e-3
        want = -gamma_ratio([a + b], [a, b]) * (2 * EULER_GAMMA + digamma(a) + digamma(b) + math.log(rho))
        assert rel(asy.phi1_x_to_1_log(a, b, 0, rho), want) < 1e-14

    def test_limit(self):
        p = Phi1Params(0.5, 0.75, 1.25)
        dev = [abs(series(p, 1 - rho, 0.6) - asy.phi1_x_to_1_log(0.5, 0.75, 0.6, rho))
               for rho in (1e-2, 1e-3, 1e-4)]
        assert dev[0] > dev[1] > dev[2]

    def test_log_shift(self):
        a, b, y = 0.5, 0.75, 0.6
        d = asy.phi1_x_to_1_log(a, b, y, 1e-3) - asy.phi1_x_to_1_log(a, b, y, 1e-5)
        assert rel(d, -gamma_ratio([a + b], [a, b]) * cmath.exp(y) * math.log(100)) < 1e-12

    def test_pole(self):
        from humbert.errors import PoleError
        with pytest.raises(PoleError):
            asy.phi1_x_to_1_log(-1, 0.5, 0.1, 1e-3)


def _decay_ok(build, oracle, radii, orders):
    for R in radii:
        exp = build(R, max(orders) + 1)
        want = oracle(R)
        terms = exp.combined_terms()
        for n in orders:
            if abs(terms[n + 1]) < 1e-6 * abs(terms[n]):
                continue
            e0 = abs(exp.truncate(n).value - want)
            e1 = abs(exp.truncate(n + 1).value - want)
            assert e1 * 1.8 <= e0, (R, n, e0, e1)


class TestOrderProperty:
    def test_large_x(self):
        _decay_ok(lambda R, N: asy.large_x_expansion(P, -R, 1, N), lambda R: series(P, -R, 1),
                  (40, 80), range(0, 5))

    def test_large_y_left(self):
        _decay_ok(lambda R, N: asy.large_y_left_expansion(P, 0.3, -R, N),
                  lambda R: series(P, 0.3, -R), (40, 80), range(0, 5))

    def test_large_y_right(self):
        _decay_ok(lambda R, N: asy.large_y_right_expansion(P, 0.3, R, N),
                  lambda R: series(P, 0.3, R), (35, 70), range(0, 5))

    def test_imaginary(self):
        _decay_ok(lambda R, N: asy.imaginary_y_expansion(P, 0.4, R, N),
                  lambda R: euler(P, 0.4, 1j * R), (60, 120), range(0, 4))

    def test_eta_x(self):
        _decay_ok(lambda R, N: asy.eta_large_x_expansion(Q, -R, 2, N),
                  lambda R: series(Q, -R, -2 / R), (60, 120), range(1, 5))

    def test_eta_y(self):
        _decay_ok(lambda R, N: asy.eta_large_y_expansion(P, -R, 1.5, N, "left"),
                  lambda R: series(P, -1.5 / R, -R), (50, 100), range(1, 5))

    def test_joint_lambda_minus(self):
        p = Phi1Params(0.3, 0.7, 1.9)
        _decay_ok(lambda R, N: asy.joint_lambda_expansion(p, R, 0.8, -1, N),
                  lambda R: series(p, -R, -0.8 * R), (50, 100), range(0, 5))
