"""Container for multi-family asymptotic sums and the truncation rule."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..types import TruncatedValue


def optimal_truncation(moduli: Sequence[float]) -> int:
    """Index of the smallest term before the first strict increase."""
    mods = [float(m) for m in moduli]
    if not mods:
        return 0
    i = 0
    while i + 1 < len(mods) and mods[i + 1] <= mods[i]:
        i += 1
    return i


@dataclass(frozen=True)
class TermGroup:
    """One family: prefactor * sum_k coefficients[k] * powers[k]."""

    prefactor: complex
    scale: str
    coefficients: tuple
    powers: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a term group needs at least the k=0 coefficient")
        if len(self.coefficients) != len(self.powers):
            raise ValueError("coefficients and powers differ in length")

    def term(self, k: int) -> complex:
        if k >= len(self.coefficients):
            return 0j
        return self.prefactor * self.coefficients[k] * self.powers[k]

    def partial_sum(self, order: int | None = None) -> complex:
        n = len(self.coefficients) if order is None else min(order + 1, len(self.coefficients))
        return sum((self.term(k) for k in range(n)), 0j)


@dataclass(frozen=True)
class AsymptoticExpansion:
    terms: tuple
    sector: str
    large_variable: str

    @property
    def max_order(self) -> int:
        return max(len(g.coefficients) for g in self.terms) - 1

    def combined_terms(self) -> list:
        return [sum((g.term(k) for g in self.terms), 0j) for k in range(self.max_order + 1)]

    def truncate(self, order: int | None = None, optimal: bool = False) -> TruncatedValue:
        """Sum all families up to ``order`` (inclusive), or to the optimal index."""
        combined = self.combined_terms()
        last = self.max_order if order is None else min(order, self.max_order)
        if optimal and last >= 1:
            last = optimal_truncation([abs(t) for t in combined[:last + 1]])
        value = sum(combined[:last + 1], 0j)
        return TruncatedValue(value, abs(combined[last]), last)
