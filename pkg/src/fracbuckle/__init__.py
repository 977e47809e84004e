"""Certified numerics for fractional (Caputo) Euler column buckling.

Typical use::

    from fracbuckle import ColumnSpec, approximate_s0, critical_load

    s0 = approximate_s0(0.527, epsilon=1e-3)
    load = critical_load(ColumnSpec(E=200e9, I=1e-6, l=2.0, alpha=0.527), s0)
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .analysis import (AssumptionReport, ExistenceReport, check_assumption_A,
                       check_assumption_B, nonexistence_evidence, verify_interlacing,
                       verify_lemma_monotonicity)
from .buckling import (ColumnSpec, CriticalLoad, CurveSamples, critical_load,
                       deflection_curve, residual_norm, symmetrize)
from .errors import (BoundUnavailable, DomainError, FracBuckleError, GammaOverflowError,
                     InvalidBracket, NoRootFound, NotConverged)
from .rootfind import RootResult, find_first_bracket, refine, smallest_positive_root
from .series import (SolutionCurve, TruncatedPolynomial, caputo_residual, evaluate,
                     evaluate_derivative, tail_bound, truncation)
from .solver import S0Approximation, approximate_s0, sweep_alpha
from .specialfn import CoefficientTable, coefficients, gamma_ratio, log_gamma

__all__ = [
    "BACKEND",
    "AssumptionReport", "ExistenceReport", "check_assumption_A", "check_assumption_B",
    "nonexistence_evidence", "verify_interlacing", "verify_lemma_monotonicity",
    "ColumnSpec", "CriticalLoad", "CurveSamples", "critical_load", "deflection_curve",
    "residual_norm", "symmetrize",
    "BoundUnavailable", "DomainError", "FracBuckleError", "GammaOverflowError",
    "InvalidBracket", "NoRootFound", "NotConverged",
    "RootResult", "find_first_bracket", "refine", "smallest_positive_root",
    "SolutionCurve", "TruncatedPolynomial", "caputo_residual", "evaluate",
    "evaluate_derivative", "tail_bound", "truncation",
    "S0Approximation", "approximate_s0", "sweep_alpha",
    "CoefficientTable", "coefficients", "gamma_ratio", "log_gamma",
]
