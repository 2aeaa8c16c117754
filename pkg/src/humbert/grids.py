"""Deterministic point sets shared by the CLI and the test vectors."""
from __future__ import annotations

PARAMETER_SETS = (
    (0.5, 1.0, 1.5),
    (0.5, 0.25, 1.25),
    (0.3, 0.7, 1.9),
    (1.2, -0.4, 2.5),
    (0.25 + 0.1j, 0.6, 1.75 - 0.2j),
)

# every point lies where at least two convergent methods apply
POINTS = (
    (0.3, 0.5),
    (-0.6, -1.0),
    (0.7, 2.0),
    (-3.0, 0.5),
    (-8.0, 1.5),
    (-20.0, 0.5),
    (0.9, 0.3),
    (0.5 + 0.4j, 1.0j),
    (-1.5 - 0.5j, -2.0),
    (0.0, 3.0),
)


def overlap_grid() -> list[tuple]:
    """50 rows of (a, b, c, x, y) in a fixed order."""
    return [(a, b, c, x, y) for (a, b, c) in PARAMETER_SETS for (x, y) in POINTS]
