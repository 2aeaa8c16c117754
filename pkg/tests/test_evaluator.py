import csv
import math
from pathlib import Path

import numpy as np
import pytest

from humbert import reference as ref
from humbert.errors import DomainError
from humbert.evaluator import (
    CONVERGENT, EvalReport, Regime, Thresholds, cross_check, evaluate, evaluate_forced, evaluate_many,
)
from humbert.grids import overlap_grid
from humbert.special.hyper import hyp1f1
from humbert.types import Phi1Params

from conftest import rel

P = Phi1Params(0.5, 1.0, 1.5)
DATA = Path(__file__).parent / "data" / "overlap_vectors.csv"


class TestDispatch:
    def test_small_point(self):
        rep = evaluate(P, 0.3, 0.2)
        assert rep.regime is Regime.SERIES_2F1
        assert rel(rep.value, ref.phi1_taylor(P, 0.3, 0.2, tol=1e-15).value) < 1e-13

    def test_large_x(self):
        assert evaluate(P, -40, 1).regime is Regime.LARGE_X

    def test_near_one(self):
        # a+b-c = 1/4 keeps the connection formula applicable
        rep = evaluate(Phi1Params(0.5, 1.0, 1.25), 0.999, 0.5)
        assert rep.regime is Regime.CONNECTION_X1
        assert rel(rep.value, ref.phi1_euler_integral(Phi1Params(0.5, 1.0, 1.25), 0.999, 0.5).value) < 1e-9

    def test_reduction_first(self):
        assert evaluate(Phi1Params(-3, 1, 1.5), 0.3, 2).regime is Regime.REDUCTION
        assert evaluate(Phi1Params(3.5, 1, 1.5), -7, 2).regime is Regime.REDUCTION

    def test_large_y(self):
        rep = evaluate(P, 0.3, 40)
        assert rep.regime is Regime.LARGE_Y_RIGHT
        assert rel(rep.value, ref.phi1_series_2f1(P, 0.3, 40).value) < 1e-10
        rep = evaluate(P, 0.3, -40)
        assert rep.regime is Regime.LARGE_Y_LEFT
        assert rel(rep.value, ref.phi1_series_2f1(P, 0.3, -40).value) < 1e-10

    def test_imaginary(self):
        rep = evaluate(P, 0.3, 1 + 60j)
        assert rep.regime is Regime.IMAGINARY_Y
        assert rel(rep.value, ref.phi1_euler_integral(P, 0.3, 1 + 60j).value) < 1e-10

    def test_joint(self):
        rep = evaluate(P, -50, -40)
        assert rep.regime is Regime.JOINT_LAMBDA
        assert rel(rep.value, ref.phi1_series_2f1(P, -50, -40).value) < 1e-10

    def test_cut(self):
        with pytest.raises(DomainError, match="nearest applicable regime"):
            evaluate(P, 2.0, 0.5)

    def test_deterministic(self):
        for x, y in [(0.3, 0.2), (-40, 1), (0.3, 40), (-50, -40), (0.9, 0.1)]:
            assert evaluate(P, x, y) == evaluate(P, x, y)

    @pytest.mark.parametrize("x,y", [(-7.0, 3.0), (-3.0, -28.0), (0.95, 2.0), (-1.5 + 2j, 4 - 3j),
                                     (-12.0, 18.0), (0.5, -24.0), (-200.0, 5.0)])
    def test_against_euler(self, x, y):
        rep = evaluate(P, x, y)
        assert rel(rep.value, ref.phi1_euler_integral(P, x, y, rtol=1e-13).value) < 1e-9
        assert rep.abs_error_estimate >= 0

    def test_forced(self):
        rep = evaluate_forced(P, -40, 1, "large-x", order=8)
        assert rep.regime is Regime.LARGE_X
        assert rel(rep.value, evaluate(P, -40, 1).value) < 1e-10
        with pytest.raises(ValueError):
            evaluate_forced(P, -40, 1, "no-such-regime")

    def test_forced_log_model(self):
        q = Phi1Params(0.5, 0.75, 1.25)
        rep = evaluate_forced(q, 1 - 1e-4, 0.6, "x-to-1-log")
        assert rep.regime is Regime.X_TO_1_LOG
        assert abs(rep.value - ref.phi1_series_2f1(q, 1 - 1e-4, 0.6).value) < 1e-2


class TestCrossCheck:
    def test_overlap_point(self):
        rep = cross_check(P, -20, 0.5)
        assert rep.agreement_matrix["series-2f1|large-x"] <= 1e-7

    def test_taylor_vs_series(self):
        rep = cross_check(P, 0.3, 0)
        assert rep.agreement_matrix["taylor|series-2f1"] <= 1e-12

    def test_x_zero(self):
        rep = cross_check(P, 0, 1.7)
        assert abs(rep.value - hyp1f1(0.5, 1.5, 1.7).value) <= 1e-12

    def test_returns_convergent(self):
        assert cross_check(P, -20, 0.5).regime in CONVERGENT

    def test_single_method(self):
        with pytest.raises(DomainError):
            cross_check(Phi1Params(1.5, 1, 1.2), 0.3, 60j)


class TestThresholds:
    def test_defaults(self):
        th = Thresholds()
        assert (th.series_x, th.large_x, th.large_y, th.near_one) == (0.8, 5.0, 25.0, 0.25)

    def test_lines(self):
        th = Thresholds.from_lines("# tuned\nlarge_x = 8\n\nmax_order=30  # cap\n")
        assert th.large_x == 8.0 and th.max_order == 30

    def test_bad_key(self):
        with pytest.raises(ValueError):
            Thresholds.from_lines("nope = 1")

    def test_bad_line(self):
        with pytest.raises(ValueError):
            Thresholds.from_lines("large_x 8")

    def test_env(self, tmp_path, monkeypatch):
        f = tmp_path / "th.txt"
        f.write_text("large_x = 60\n")
        monkeypatch.setenv("HUMBERT_THRESHOLDS", str(f))
        th = Thresholds.from_env()
        assert th.large_x == 60
        assert evaluate(P, -40, 1, thresholds=th).regime is not Regime.LARGE_X

    def test_override_changes_dispatch(self):
        assert evaluate(P, 0.95, 0.2, thresholds=Thresholds().updated(series_x=0.99)).regime is Regime.SERIES_2F1
        assert evaluate(P, -40, 1, thresholds=Thresholds().updated(large_x=100)).regime is not Regime.LARGE_X


class TestMany:
    def test_matches_scalar(self, rng):
        xs = rng.uniform(-30, 0.7, 40) + 1j * rng.uniform(-0.5, 0.5, 40)
        ys = rng.uniform(-30, 30, 40)
        out = evaluate_many(P, xs, ys)
        for x, y, v in zip(xs, ys, out):
            assert rel(v, evaluate(P, x, y).value) < 1e-10

    def test_shape(self):
        assert evaluate_many(P, [], []).shape == (0,)


class TestReport:
    def test_negative_error_rejected(self):
        with pytest.raises(ValueError):
            EvalReport(1.0, Regime.TAYLOR, -1.0)


class TestOverlapVectors:
    def test_grid_shape(self):
        assert len(overlap_grid()) == 50

    def test_file_cross_check(self):
        with DATA.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 50
        worst = 0.0
        for r in rows:
            c = lambda k: complex(float(r[k + "_re"]), float(r[k + "_im"]))
            p = Phi1Params(c("a"), c("b"), c("c"))
            rep = cross_check(p, c("x"), c("y"))
            worst = max(worst, max(rep.agreement_matrix.values()))
            assert abs(rep.value - c("value")) <= 2 * float(r["err_est"])
        assert worst <= 1e-6
