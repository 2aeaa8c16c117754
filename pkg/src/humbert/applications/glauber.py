"""Two-time autocorrelation of the quenched 1D Glauber-Ising chain."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError
from ..evaluator import EvalReport, evaluate
from ..special.kummer import erfc
from ..types import Phi1Params

_KERNEL = Phi1Params(0.5, 1.0, 1.5)


@dataclass(frozen=True)
class GlauberPoint:
    """Waiting time ``s``, time difference ``tau`` and inverse correlation length ``mu``.

    The equilibrium relaxation time is tau_eq = 2 / mu**2.
    """

    s: float
    tau: float
    mu: float = 0.0

    def __post_init__(self):
        if not (self.s > 0 and self.tau > 0):
            raise DomainError("s and tau must be positive")
        if not self.mu >= 0:
            raise DomainError("mu must be nonnegative")

    @property
    def ratio(self) -> float:
        """2s/tau, the first scaling variable."""
        return 2.0 * self.s / self.tau

    @property
    def mu2s(self) -> float:
        """mu^2 s = 2s/tau_eq, the second scaling variable."""
        return self.mu ** 2 * self.s

    @property
    def tau_eq(self) -> float:
        return math.inf if self.mu == 0 else 2.0 / self.mu ** 2


def glauber_c0_report(pt: GlauberPoint, tol: float = 1e-12) -> tuple[float, EvalReport]:
    x, y = pt.ratio, pt.mu2s
    rep = evaluate(_KERNEL, -x, -y, tol)
    value = 2.0 / math.pi * math.sqrt(x) * math.exp(-0.5 * pt.mu ** 2 * pt.tau) * rep.value.real
    return value, rep


def glauber_c0(pt: GlauberPoint, tol: float = 1e-12) -> float:
    """C_0(s+tau, s) = (2/pi) sqrt(2s/tau) e^{-mu^2 tau/2} Phi_1[1/2,1;3/2;-2s/tau,-mu^2 s]."""
    return glauber_c0_report(pt, tol)[0]


def glauber_zero_temperature(s: float, tau: float) -> float:
    """Closed form at mu = 0: (2/pi) arctan sqrt(2s/tau)."""
    if not (s > 0 and tau > 0):
        raise DomainError("s and tau must be positive")
    return 2.0 / math.pi * math.atan(math.sqrt(2.0 * s / tau))


def glauber_equilibrium_limit(tau_over_taueq: float) -> float:
    """Large-s limit erfc(sqrt(tau/tau_eq))."""
    if not tau_over_taueq > 0:
        raise DomainError("tau/tau_eq must be positive")
    return erfc(math.sqrt(tau_over_taueq)).real
