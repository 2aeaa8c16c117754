"""Physical and operator-theoretic uses of Phi_1."""
from .glauber import (
    GlauberPoint, glauber_c0, glauber_c0_report, glauber_equilibrium_limit, glauber_zero_temperature,
)
from .prabhakar import (
    PrabhakarParams, evaluate_expansion, kernel_bound_constant, phi1_kernel_bound, prabhakar_apply,
    prabhakar_minus_asym, prabhakar_minus_power, prabhakar_plus_asym, prabhakar_plus_power,
)

__all__ = [
    "GlauberPoint", "PrabhakarParams", "evaluate_expansion", "glauber_c0", "glauber_c0_report",
    "glauber_equilibrium_limit", "glauber_zero_temperature", "kernel_bound_constant",
    "phi1_kernel_bound", "prabhakar_apply", "prabhakar_minus_asym", "prabhakar_minus_power",
    "prabhakar_plus_asym", "prabhakar_plus_power",
]
