import cmath

import numpy as np
import pytest


def rel(got, want):
    got, want = complex(got), complex(want)
    return abs(got - want) / max(abs(want), 1e-300)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_params(rng, lo_c=0.5, hi_c=4.0):
    """(a, b, c) with |a|,|b| <= 3 and 0.5 <= |c| <= 4, c off the poles."""
    a = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
    b = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
    while True:
        r = rng.uniform(lo_c, hi_c)
        c = cmath.rect(r, rng.uniform(-0.6, 0.6))
        if abs(c - round(c.real)) > 0.1 or c.real > 0:
            return a, b, c
