"""Numerical evaluation of the Humbert confluent function Phi_1 and friends."""
from .errors import DomainError, HumbertError, NonFiniteError, PoleError
from .evaluator import EvalReport, Regime, Thresholds, cross_check, evaluate, evaluate_many
from .types import Phi1Params, Psi1Params, SeriesResult, TruncatedValue

__version__ = "0.1.0"

__all__ = [
    "DomainError", "EvalReport", "HumbertError", "NonFiniteError", "Phi1Params", "PoleError",
    "Psi1Params", "Regime", "SeriesResult", "Thresholds", "TruncatedValue", "cross_check",
    "evaluate", "evaluate_many",
]
