"""Asymptotic expansions of Phi_1 and their coefficient generators."""
from .coefficients import (
    coeff_a1, coeff_a2, coeff_a_k, coeff_b1, coeff_b2, coeff_c1, coeff_c2,
    kdf_01_21, kdf_11_1,
)
from .expansion import AsymptoticExpansion, TermGroup, optimal_truncation
from .regimes import (
    default_w, eta_large_x_expansion, eta_large_y_expansion, expand_eta_large_x,
    expand_eta_large_y, expand_imaginary_y, expand_joint_beta, expand_joint_imaginary,
    expand_joint_lambda, expand_large_x, expand_large_y_left, expand_large_y_right,
    expand_shifted_imaginary_y, imaginary_y_expansion, joint_beta_expansion,
    joint_imaginary_expansion, joint_lambda_expansion, large_x_expansion, large_y_expansion,
    large_y_left_expansion, large_y_right_expansion, phi1_x_to_1_log,
    shifted_imaginary_y_expansion,
)

__all__ = [n for n in dir() if not n.startswith("_")]
