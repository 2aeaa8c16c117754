"""Adaptive Gauss-Legendre quadrature for vectorised complex integrands."""
from __future__ import annotations

from typing import Callable

import numpy as np

from .types import SeriesResult

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(64)


def _panel(f, lo: float, hi: float) -> complex:
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    vals = np.asarray(f(mid + half * _NODES), dtype=complex)
    return complex(np.dot(_WEIGHTS, vals) * half)


def adaptive(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
             rtol: float = 1e-12, atol: float = 0.0, max_depth: int = 48,
             max_panels: int = 4000) -> SeriesResult:
    """Integrate ``f`` over [lo, hi] by bisecting 64-point panels.

    A panel is accepted when its two halves agree with the whole to within
    ``max(atol, rtol*|I|)`` scaled by the panel's share of the interval.
    """
    if hi == lo:
        return SeriesResult(0j, 0.0, 1, True)
    width = hi - lo
    whole = _panel(f, lo, hi)
    scale = abs(whole)
    total = 0j
    err = 0.0
    panels = 1
    ok = True
    stack = [(lo, hi, whole, 0)]
    while stack:
        a, b, q, depth = stack.pop()
        m = 0.5 * (a + b)
        ql = _panel(f, a, m)
        qr = _panel(f, m, b)
        panels += 2
        q2 = ql + qr
        delta = abs(q2 - q)
        scale = max(scale, abs(total + q2))
        allowed = max(atol, rtol * scale) * max((b - a) / width, 1e-3)
        if delta <= allowed or depth >= max_depth or panels >= max_panels:
            if delta > allowed:
                ok = False
            total += q2
            err += delta
        else:
            stack.append((m, b, qr, depth + 1))
            stack.append((a, m, ql, depth + 1))
    ok = ok and err <= max(atol, rtol * max(abs(total), 1e-300)) * 10
    return SeriesResult(total, err, panels, ok)


def semi_infinite(f: Callable[[np.ndarray], np.ndarray], start: float = 0.0,
                  first: float = 1.0, rtol: float = 1e-12, envelope: float = 1e-16,
                  max_doublings: int = 80) -> SeriesResult:
    """Integrate over [start, inf) on panels [start, start+first], then doubling.

    Stops once two consecutive panels each contribute less than ``envelope``
    times the running integral.
    """
    total = 0j
    err = 0.0
    used = 0
    ok = True
    lo = start
    width = first
    quiet = 0
    for _ in range(max_doublings):
        hi = lo + width
        r = adaptive(f, lo, hi, rtol=rtol, atol=rtol * abs(total))
        total += r.value
        err += r.abs_error_estimate
        used += r.terms_used
        ok = ok and r.converged
        if abs(r.value) <= envelope * abs(total) and np.isfinite(abs(total)):
            quiet += 1
            if quiet >= 2:
                return SeriesResult(total, err, used, ok)
        else:
            quiet = 0
        lo = hi
        width *= 2.0
    return SeriesResult(total, err, used, False)
