"""Front door: pick a representation of Phi_1, evaluate it, report the method."""
from __future__ import annotations

import cmath
import enum
import itertools
import math
import os
from dataclasses import asdict, dataclass, fields, replace
from typing import Callable, Iterator

from . import asymptotic as asy
from . import reference as ref
from .errors import DomainError, HumbertError
from .types import (
    DEFAULT_TOL, Phi1Params, SeriesResult, as_complex, converged_flag,
    is_nonpositive_int, near_int,
)

THRESHOLDS_ENV = "HUMBERT_THRESHOLDS"


class Regime(str, enum.Enum):
    TAYLOR = "taylor"
    SERIES_2F1 = "series-2f1"
    EULER_INTEGRAL = "euler-integral"
    CONNECTION_X1 = "connection-x1"
    LARGE_X = "large-x"
    LARGE_Y_LEFT = "large-y-left"
    LARGE_Y_RIGHT = "large-y-right"
    IMAGINARY_Y = "imaginary-y"
    JOINT_BETA = "joint-beta"
    JOINT_LAMBDA = "joint-lambda"
    ETA_X = "eta-x"
    ETA_Y = "eta-y"
    X_TO_1_LOG = "x-to-1-log"
    REDUCTION = "reduction"

    def __str__(self) -> str:
        return self.value


CONVERGENT = (Regime.SERIES_2F1, Regime.TAYLOR, Regime.EULER_INTEGRAL,
              Regime.CONNECTION_X1, Regime.REDUCTION, Regime.LARGE_X)


@dataclass(frozen=True)
class Thresholds:
    """Dispatch crossovers.

    ``from_env`` reads overrides from the file named by $HUMBERT_THRESHOLDS,
    one ``key=value`` per line; blank lines and ``#`` comments are skipped.
    """

    series_x: float = 0.8       # |x| bound for the 2F1 outer series
    series_y: float = 20.0      # |y| bound for the 2F1 outer series
    large_x: float = 5.0        # |x| above which the 1/x series is tried first
    large_y: float = 25.0       # |y| above which the large-y families are tried
    near_one: float = 0.25      # |1-x| below which the x=1 connection is tried
    int_gap: float = 0.1        # minimum distance of a+b-c from the integers for the connection
    large_x_max_y: float = 30.0  # beyond this |y| the 1/x series loses digits to cancellation
    max_order: int = 40         # cap for divergent expansions

    @classmethod
    def from_mapping(cls, data: dict) -> "Thresholds":
        types = {f.name: f.type for f in fields(cls)}
        bad = set(data) - set(types)
        if bad:
            raise ValueError(f"unknown threshold keys: {sorted(bad)}")
        conv = {k: (int(v) if types[k] in ("int", int) else float(v)) for k, v in data.items()}
        return cls(**conv)

    @classmethod
    def from_lines(cls, text: str) -> "Thresholds":
        data = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {raw!r}")
            data[key.strip()] = value.strip()
        return cls.from_mapping(data)

    @classmethod
    def from_env(cls) -> "Thresholds":
        path = os.environ.get(THRESHOLDS_ENV)
        if not path:
            return cls()
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh.read())

    def updated(self, **changes) -> "Thresholds":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EvalReport:
    value: complex
    regime: Regime
    abs_error_estimate: float
    agreement_matrix: dict | None = None

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise ValueError("abs_error_estimate must be nonnegative")


Candidate = tuple[Regime, Callable[[], tuple[complex, float]]]


def _from_series(r: SeriesResult) -> tuple[complex, float]:
    return r.value, r.abs_error_estimate


def _sum_optimal(exp: asy.AsymptoticExpansion) -> tuple[complex, float]:
    """Sum each family to its own smallest term; the error estimate is that term."""
    value = 0j
    err = 0.0
    big = 0.0
    for g in exp.terms:
        mods = [abs(g.term(k)) for k in range(len(g.coefficients))]
        idx = asy.optimal_truncation(mods)
        value += g.partial_sum(idx)
        tail = mods[idx]
        if tail == 0 and idx + 1 < len(mods):
            tail = mods[idx + 1]
        err += tail
        big = max(big, max(mods))
    return value, err + 4e-16 * big


def _large_x_value(p: Phi1Params, x: complex, y: complex, tol: float) -> tuple[complex, float]:
    value, err = 0j, math.inf
    for order in (16, 32, 64, 128):
        exp = asy.large_x_expansion(p, x, y, order)
        terms = exp.combined_terms()
        value = sum(terms, 0j)
        big = max(abs(t) for t in terms)
        err = abs(terms[-1]) + abs(terms[-2]) + 4e-16 * big * order
        if err <= tol * abs(value):
            break
    return value, err


def _in_sector(z: complex, half: float) -> bool:
    return z != 0 and abs(cmath.phase(z)) <= half


def _large_y_tag(y: complex) -> Regime:
    half = math.pi / 2 - asy.regimes.DEFAULT_DELTA
    if _in_sector(-y, half):
        return Regime.LARGE_Y_LEFT
    if _in_sector(y, half):
        return Regime.LARGE_Y_RIGHT
    return Regime.IMAGINARY_Y


def _euler_ok(p: Phi1Params) -> bool:
    return p.c.real > p.a.real > 0


def _reduction(p: Phi1Params, x, y, tol) -> Candidate | None:
    a, c = p.a, p.c
    if is_nonpositive_int(a):
        m = int(round(-a.real))
        return Regime.REDUCTION, lambda: _from_series(ref.phi1_reduction_negm(m, p.b, c, x, y, tol))
    d = a - c
    if d.imag == 0 and d.real >= 0 and d.real == round(d.real):
        m = int(round(d.real))
        return Regime.REDUCTION, lambda: _from_series(ref.phi1_reduction_cm(m, p.b, c, x, y, tol))
    return None


def _joint_candidates(p: Phi1Params, x: complex, y: complex) -> Iterator[Candidate]:
    half = math.pi / 2 - asy.regimes.DEFAULT_DELTA
    if x.imag == 0 and x.real < 0 and _euler_ok(p):
        big = -x.real
        lam = y / big
        if _in_sector(lam, half):
            yield Regime.JOINT_LAMBDA, lambda: _sum_optimal(
                asy.joint_lambda_expansion(p, big, lam, 1, 40))
        elif _in_sector(-lam, half):
            yield Regime.JOINT_LAMBDA, lambda: _sum_optimal(
                asy.joint_lambda_expansion(p, big, -lam, -1, 40))
        elif lam.real == 0:
            yield Regime.JOINT_LAMBDA, lambda: _sum_optimal(
                asy.joint_imaginary_expansion(p, big, lam.imag, 40))
    yield Regime.JOINT_BETA, lambda: _sum_optimal(asy.joint_beta_expansion(p, x, y, 30))


def _candidates(p: Phi1Params, x: complex, y: complex, tol: float,
                th: Thresholds) -> Iterator[Candidate]:
    """Applicable methods in dispatch order."""
    red = _reduction(p, x, y, tol)
    if red is not None:
        yield red
    a, b, c = p.a, p.b, p.c
    series = (Regime.SERIES_2F1, lambda: _from_series(ref.phi1_series_2f1(p, x, y, tol)))
    if abs(x) <= th.series_x and abs(y) <= th.series_y:
        yield series
    if x == 1:
        yield Regime.CONNECTION_X1, lambda: _from_series(ref.phi1_at_one(p, y, tol))
    if abs(x) > th.large_x:
        if not near_int(a - b, 0.0) and abs(y) <= th.large_x_max_y:
            yield Regime.LARGE_X, lambda: _large_x_value(p, x, y, tol)
            yield Regime.ETA_X, lambda: _sum_optimal(
                asy.eta_large_x_expansion(p, x, x * y, th.max_order))
        if abs(y) > th.large_y:
            yield from _joint_candidates(p, x, y)
    if abs(y) > th.large_y and abs(x) <= th.large_x:
        yield _large_y_tag(y), lambda: _sum_optimal(asy.large_y_expansion(p, x, y, th.max_order))
    if abs(1 - x) < th.near_one:
        if abs(a + b - c - round((a + b - c).real)) >= th.int_gap:
            yield Regime.CONNECTION_X1, lambda: _from_series(ref.phi1_near_x1_connection(p, x, y, tol))
    if abs(x) <= th.series_x or abs(1 - x) < th.near_one:
        if abs(y) <= th.series_y:
            yield series
    if _euler_ok(p):
        yield Regime.EULER_INTEGRAL, lambda: _from_series(
            ref.phi1_euler_integral(p, x, y, rtol=max(tol, 1e-13)))
    if abs(x) > 1 and not near_int(a - b, 0.0):
        yield Regime.LARGE_X, lambda: _large_x_value(p, x, y, tol)
    yield series


def evaluate(p: Phi1Params, x, y, tol: float = DEFAULT_TOL,
             thresholds: Thresholds | None = None) -> EvalReport:
    """Evaluate Phi_1[a,b;c;x,y] with the first method that meets ``tol``.

    Methods are tried in dispatch order; if none reaches the tolerance the
    one with the smallest error estimate is returned.
    """
    x, y = as_complex(x), as_complex(y)
    th = thresholds or Thresholds.from_env()
    if ref.on_cut(x) and x != 1:
        raise DomainError("x lies on the branch cut (1, inf); nearest applicable regime: "
                          "series-2f1 just off the real axis")
    if x == 1 and (p.c - p.a - p.b).real <= 0:
        raise DomainError("Phi_1 diverges at x=1 when Re(c-a-b) <= 0; nearest applicable "
                          "regime: connection-x1 for |1-x| > 0")
    best: EvalReport | None = None
    tried: set = set()
    failures = []
    for tag, run in _candidates(p, x, y, tol, th):
        if tag in tried:
            continue
        tried.add(tag)
        try:
            value, err = run()
        except HumbertError as exc:
            failures.append(f"{tag}: {exc}")
            continue
        if not (cmath.isfinite(value) and err == err):
            failures.append(f"{tag}: non-finite result")
            continue
        report = EvalReport(value, tag, float(err))
        if converged_flag(value, err, tol):
            return report
        if best is None or err < best.abs_error_estimate:
            best = report
    if best is not None:
        return best
    raise DomainError("no representation applies at this point; tried: " + "; ".join(failures))


def _cross_candidates(p: Phi1Params, x: complex, y: complex,
                      th: Thresholds) -> Iterator[Candidate]:
    tol = 1e-14
    a, b, c = p.a, p.b, p.c
    red = _reduction(p, x, y, tol)
    if red is not None:
        yield red
    if abs(x) < 0.9 and abs(y) <= th.series_y:
        yield Regime.TAYLOR, lambda: _from_series(ref.phi1_taylor(p, x, y, tol))
    if not ref.on_cut(x) and abs(y) <= 3 * th.large_y:
        yield Regime.SERIES_2F1, lambda: _from_series(ref.phi1_series_2f1(p, x, y, tol))
    if _euler_ok(p) and not ref.on_cut(x):
        yield Regime.EULER_INTEGRAL, lambda: _from_series(ref.phi1_euler_integral(p, x, y, 1e-13))
    if (abs(1 - x) < 1 and not ref.on_cut(x)
            and abs(a + b - c - round((a + b - c).real)) >= th.int_gap):
        yield Regime.CONNECTION_X1, lambda: _from_series(ref.phi1_near_x1_connection(p, x, y, tol))
    if abs(x) > 1 and not near_int(a - b, 0.0) and abs(y) <= th.large_x_max_y:
        yield Regime.LARGE_X, lambda: _large_x_value(p, x, y, tol)
    if abs(x) > th.large_x and not near_int(a - b, 0.0):
        yield Regime.ETA_X, lambda: _sum_optimal(asy.eta_large_x_expansion(p, x, x * y, th.max_order))
    if abs(y) > th.large_y and abs(x) <= th.large_x:
        yield _large_y_tag(y), lambda: _sum_optimal(asy.large_y_expansion(p, x, y, th.max_order))
    if abs(x) > th.large_x and abs(y) > th.large_y:
        yield from _joint_candidates(p, x, y)


def cross_check(p: Phi1Params, x, y, thresholds: Thresholds | None = None,
                accept: float = 1e-8) -> EvalReport:
    """Evaluate every applicable method and tabulate pairwise |differences|.

    Asymptotic methods count as applicable only when their own error estimate
    is within ``accept`` of the value. The returned value comes from a
    convergent method whenever one applies.
    """
    x, y = as_complex(x), as_complex(y)
    th = thresholds or Thresholds.from_env()
    results: dict[Regime, tuple[complex, float]] = {}
    for tag, run in _cross_candidates(p, x, y, th):
        if tag in results:
            continue
        try:
            value, err = run()
        except HumbertError:
            continue
        if not cmath.isfinite(value) or not err <= accept * max(abs(value), 1e-300):
            continue
        results[tag] = (value, err)
    if len(results) < 2:
        names = ", ".join(str(t) for t in results) or "none"
        raise DomainError(f"cross-check needs two applicable methods; found: {names}")
    matrix = {f"{s}|{t}": abs(results[s][0] - results[t][0])
              for s, t in itertools.combinations(results, 2)}
    chosen = next((t for t in CONVERGENT if t in results), next(iter(results)))
    value, err = results[chosen]
    return EvalReport(value, chosen, float(err), matrix)


def _truncated(exp: asy.AsymptoticExpansion, order: int | None) -> tuple[complex, float]:
    if order is None:
        return _sum_optimal(exp)
    t = exp.truncate(order)
    return t.value, t.last_term_modulus


def evaluate_forced(p: Phi1Params, x, y, regime, tol: float = DEFAULT_TOL,
                    order: int | None = None, max_order: int = 40) -> EvalReport:
    """Evaluate with one named method, bypassing dispatch.

    ``order`` fixes the truncation of asymptotic methods; by default each
    family is cut at its smallest term.
    """
    x, y = as_complex(x), as_complex(y)
    tag = Regime(regime)
    n = max_order if order is None else order
    if tag is Regime.TAYLOR:
        v, e = _from_series(ref.phi1_taylor(p, x, y, tol))
    elif tag is Regime.SERIES_2F1:
        v, e = _from_series(ref.phi1_series_2f1(p, x, y, tol))
    elif tag is Regime.EULER_INTEGRAL:
        v, e = _from_series(ref.phi1_euler_integral(p, x, y, max(tol, 1e-13)))
    elif tag is Regime.CONNECTION_X1:
        r = ref.phi1_at_one(p, y, tol) if x == 1 else ref.phi1_near_x1_connection(p, x, y, tol)
        v, e = _from_series(r)
    elif tag is Regime.REDUCTION:
        cand = _reduction(p, x, y, tol)
        if cand is None:
            raise DomainError("reduction needs a in the nonpositive integers or a-c a nonnegative integer")
        v, e = cand[1]()
    elif tag is Regime.LARGE_X:
        v, e = (_large_x_value(p, x, y, tol) if order is None
                else _truncated(asy.large_x_expansion(p, x, y, order), order))
    elif tag is Regime.LARGE_Y_LEFT:
        v, e = _truncated(asy.large_y_left_expansion(p, x, y, n), order)
    elif tag is Regime.LARGE_Y_RIGHT:
        v, e = _truncated(asy.large_y_right_expansion(p, x, y, n), order)
    elif tag is Regime.IMAGINARY_Y:
        if y.real == 0:
            exp = asy.imaginary_y_expansion(p, x, y.imag, n)
        else:
            exp = asy.shifted_imaginary_y_expansion(p, x, y.real, y.imag, n)
        v, e = _truncated(exp, order)
    elif tag is Regime.JOINT_BETA:
        v, e = _truncated(asy.joint_beta_expansion(p, x, y, n), order)
    elif tag is Regime.JOINT_LAMBDA:
        if x.imag != 0 or x.real >= 0:
            raise DomainError("joint-lambda needs real negative x")
        big = -x.real
        lam = y / big
        if lam.real == 0:
            exp = asy.joint_imaginary_expansion(p, big, lam.imag, n)
        elif lam.real > 0:
            exp = asy.joint_lambda_expansion(p, big, lam, 1, n)
        else:
            exp = asy.joint_lambda_expansion(p, big, -lam, -1, n)
        v, e = _truncated(exp, order)
    elif tag is Regime.ETA_X:
        v, e = _truncated(asy.eta_large_x_expansion(p, x, x * y, n), order)
    elif tag is Regime.ETA_Y:
        direction = "right" if y.real > 0 else "left"
        v, e = _truncated(asy.eta_large_y_expansion(p, y, x * y, n, direction), order)
    else:  # x-to-1-log
        if abs(p.c - p.a - p.b) > 1e-14:
            raise DomainError("x-to-1-log needs c = a + b")
        v, e = asy.phi1_x_to_1_log(p.a, p.b, y, 1 - x), math.inf
    return EvalReport(v, tag, float(e))


_FLIP_MAX_X = 1e4


def evaluate_many(p: Phi1Params, xs, ys, tol: float = DEFAULT_TOL,
                  thresholds: Thresholds | None = None):
    """Vectorised ``evaluate`` returning a complex array of values.

    Points inside the series-2f1 box go through one compiled loop; the rest
    are dispatched one by one.
    """
    import numpy as np

    from ._series_kernels import phi1_2f1_many

    th = thresholds or Thresholds.from_env()
    xs = np.asarray(xs, dtype=complex)
    ys = np.asarray(ys, dtype=complex)
    xs, ys = np.broadcast_arrays(xs, ys)
    shape = xs.shape
    xs = xs.ravel()
    ys = ys.ravel()
    out = np.empty(xs.shape, dtype=complex)
    box = (np.abs(xs) <= th.series_x) & (np.abs(ys) <= th.series_y) & (ys.real >= 0)
    if _reduction(p, 0j, 0j, tol) is not None:
        box[:] = False
    if box.any():
        out[box] = phi1_2f1_many(p.a, p.b, p.c, xs[box], ys[box], tol, 100000, 1e-15)
        bad = box.copy()
        bad[box] = ~np.isfinite(out[box])
        box &= ~bad
    # Kummer-flipped points: x/(x-1) lands in the unit disc for Re x < 1/2.
    # Rounding of x/(x-1) near 1 costs about |x| eps, hence the |x| cap.
    flip = (~box & (xs.real < 0.5) & (np.abs(xs) <= _FLIP_MAX_X)
            & (np.abs(ys) <= th.series_y) & ((ys.real <= 0) | (np.abs(ys) <= 2.0)))
    if _reduction(p, 0j, 0j, tol) is not None:
        flip[:] = False
    if flip.any():
        xf, yf = xs[flip], ys[flip]
        inner = phi1_2f1_many(p.c - p.a, p.b, p.c, xf / (xf - 1), -yf, tol, 100000, 1e-15,
                              max(tol, 1e-12))
        out[flip] = np.exp(yf - p.b * np.log(1 - xf)) * inner
        bad = flip.copy()
        bad[flip] = ~np.isfinite(out[flip])
        box |= flip & ~bad
    for i in np.flatnonzero(~box):
        out[i] = evaluate(p, xs[i], ys[i], tol, th).value
    return out.reshape(shape)
