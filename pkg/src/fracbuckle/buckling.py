"""Physical side: critical load, deflection curve, symmetrised curve, residuals.

    P = E I Gamma(2 - alpha) s0 / l^2,        lam = s0 / l^2
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

from .errors import BoundUnavailable, DomainError
from .series import (DEGREE_CAP, SolutionCurve, caputo_residual_closed,
                     degree_for_tolerance)
from .solver import S0Approximation
from .specialfn import check_alpha, gamma

__all__ = [
    "ColumnSpec",
    "CriticalLoad",
    "CurveSamples",
    "critical_load",
    "deflection_curve",
    "residual_norm",
    "symmetrize",
]

CURVE_TAIL_TOL = 1e-12


@dataclass(frozen=True)
class ColumnSpec:
    """Pinned column: Young's modulus E [Pa], second moment I [m^4], length l [m]."""

    E: float
    I: float  # noqa: E741
    l: float  # noqa: E741
    alpha: float
    b1: float = 1.0

    def __post_init__(self):
        for name in ("E", "I", "l"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and positive, got {v!r}")
        check_alpha(self.alpha)
        if not math.isfinite(self.b1):
            raise DomainError(f"b1 must be finite, got {self.b1!r}")


@dataclass(frozen=True)
class CriticalLoad:
    P: float
    lam: float
    s0_used: Union[S0Approximation, float]

    @property
    def s0(self) -> float:
        return _s0_value(self.s0_used)

    def to_dict(self) -> dict:
        s0 = self.s0_used
        return {
            "P": self.P,
            "lambda": self.lam,
            "s0": self.s0,
            "epsilon": s0.epsilon if isinstance(s0, S0Approximation) else None,
            "certificate": s0.certificate if isinstance(s0, S0Approximation) else None,
        }


@dataclass(frozen=True)
class CurveSamples:
    xs: Tuple[float, ...]
    ys: Tuple[float, ...]
    kind: str = "raw"


def _s0_value(s0) -> float:
    return float(s0.value if isinstance(s0, S0Approximation) else s0)


def _check_pair(spec: ColumnSpec, s0) -> float:
    if isinstance(s0, S0Approximation) and s0.alpha != spec.alpha:
        raise DomainError(f"alpha mismatch: column {spec.alpha} vs s0 {s0.alpha}")
    value = _s0_value(s0)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"s0 must be finite and positive, got {value!r}")
    return value


def critical_load(spec: ColumnSpec, s0: Union[S0Approximation, float]) -> CriticalLoad:
    """Buckling force for ``spec`` at the eigenvalue ``s0`` (= lam * l^2)."""
    value = _check_pair(spec, s0)
    l2 = spec.l * spec.l
    P = spec.E * spec.I * gamma(2.0 - spec.alpha) * value / l2
    return CriticalLoad(P, value / l2, s0)


def _uniform_grid(l: float, n: int) -> Tuple[float, ...]:
    return tuple(l * i / (n - 1) for i in range(n - 1)) + (l,)


def deflection_curve(spec: ColumnSpec, s0: Union[S0Approximation, float],
                     n_samples: int = 101) -> CurveSamples:
    """Samples of y(x) = b1 x p_N(lam x^2) on a uniform grid over [0, l].

    N is the smallest degree whose tail bound over [0, lam l^2] is below 1e-12.
    """
    if n_samples < 2:
        raise DomainError("n_samples must be >= 2")
    value = _check_pair(spec, s0)
    lam = value / (spec.l * spec.l)
    try:
        degree = degree_for_tolerance(spec.alpha, value, CURVE_TAIL_TOL, min_degree=2)
    except BoundUnavailable:
        degree = DEGREE_CAP
    curve = SolutionCurve(spec.alpha, lam, spec.b1, degree)
    xs = _uniform_grid(spec.l, n_samples)
    ps = curve.poly.many([lam * x * x for x in xs])
    ys = tuple(spec.b1 * x * p for x, p in zip(xs, ps))
    return CurveSamples(xs, ys, "raw")


def symmetrize(curve: CurveSamples) -> CurveSamples:
    """w(x) = (y(x) + y(l - x)) / 2 on the same grid."""
    xs, ys = curve.xs, curve.ys
    n = len(xs)
    if n < 2 or len(ys) != n:
        raise DomainError("curve needs at least two samples with matching lengths")
    step = (xs[-1] - xs[0]) / (n - 1)
    scale = max(abs(xs[-1]), abs(xs[0]), 1.0)
    if xs[0] != 0.0 or any(abs(xs[i] - i * step) > 1e-9 * scale for i in range(n)):
        raise DomainError("symmetrize needs a uniform grid starting at 0")
    ws = tuple(0.5 * (ys[i] + ys[n - 1 - i]) for i in range(n))
    return CurveSamples(xs, ws, "symmetrized")


def residual_norm(spec: ColumnSpec, s0: Union[S0Approximation, float], degree: int,
                  n_samples: int = 101) -> float:
    """max |D^(1+alpha) y_n + lam x^(1-alpha) y_n| over the grid (0, l]."""
    if degree < 1:
        raise DomainError("degree must be >= 1")
    if n_samples < 2:
        raise DomainError("n_samples must be >= 2")
    value = _check_pair(spec, s0)
    if spec.b1 == 0.0:
        return 0.0
    curve = SolutionCurve(spec.alpha, value / spec.l ** 2, spec.b1, degree)
    xs = _uniform_grid(spec.l, n_samples)[1:]
    return max(abs(caputo_residual_closed(curve, x)) for x in xs)
