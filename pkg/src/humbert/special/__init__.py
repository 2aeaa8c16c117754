"""Complex special-function primitives."""
from .gamma import (
    EULER_GAMMA, cpow, digamma, gamma, gamma_ratio, log_gamma, pochhammer,
    pochhammer_signed, rgamma,
)
from .hyper import hyp1f1, hyp1f1_regularized, hyp2f1, pfq
from .kummer import erfc, kummer_u

__all__ = [
    "EULER_GAMMA", "cpow", "digamma", "erfc", "gamma", "gamma_ratio",
    "hyp1f1", "hyp1f1_regularized", "hyp2f1", "kummer_u", "log_gamma",
    "pfq", "pochhammer", "pochhammer_signed", "rgamma",
]
