"""Truncations p_n of the alternating Gamma-ratio series and their residuals.

    p_n(x) = sum_{k=0}^{n} (-1)^k a_k x^k,        y(x) = b1 * x * p_inf(lam * x^2)

The limit p_inf is never materialised: callers take a truncation of high
enough degree and add :func:`tail_bound` as slack.
"""
from __future__ import annotations

import math
from array import array
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath

from ._backend import kernels
from .errors import BoundUnavailable, DomainError
from .specialfn import check_alpha, coefficients

__all__ = [
    "DEGREE_CAP",
    "SolutionCurve",
    "TruncatedPolynomial",
    "caputo_residual",
    "caputo_residual_closed",
    "caputo_residual_termwise",
    "degree_for_tolerance",
    "evaluate",
    "evaluate_derivative",
    "tail_bound",
    "truncation",
]

DEGREE_CAP = 200


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"evaluation point must be finite, got {x!r}")
    if x < 0.0:
        raise DomainError(f"evaluation point must be >= 0, got {x!r}")
    return x


@dataclass(frozen=True)
class TruncatedPolynomial:
    """p_n for one fractional index, stored by its signed coefficients."""

    alpha: float
    degree: int
    coeffs: tuple
    _c: array = field(init=False, repr=False, compare=False)
    _d: array = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        c = array("d", self.coeffs)
        d = array("d", [k * self.coeffs[k] for k in range(1, len(self.coeffs))] or [0.0])
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_d", d)

    def __call__(self, x: float) -> float:
        return kernels.horner_comp(self._c, _check_x(x))

    def derivative(self, x: float) -> float:
        return kernels.horner_comp(self._d, _check_x(x))

    def many(self, xs) -> list:
        """Evaluate at every point of ``xs`` (all assumed finite and >= 0)."""
        return kernels.horner_comp_many(self._c, [float(x) for x in xs])

    def derivative_many(self, xs) -> list:
        return kernels.horner_comp_many(self._d, [float(x) for x in xs])

    def abs_sum(self, x: float) -> float:
        """sum |c_k| x^k, the condition scale of an evaluation at ``x``."""
        return kernels.horner_plain(array("d", [abs(c) for c in self.coeffs]), x)


@lru_cache(maxsize=1024)
def _truncation(alpha: float, n: int) -> TruncatedPolynomial:
    table = coefficients(alpha, n)
    signed = tuple(v if k % 2 == 0 else -v for k, v in enumerate(table.values))
    return TruncatedPolynomial(alpha, n, signed)


def truncation(alpha: float, n: int) -> TruncatedPolynomial:
    """Build p_n for ``alpha`` in (0, 1]."""
    alpha = check_alpha(alpha)
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    return _truncation(alpha, int(n))


def evaluate(p: TruncatedPolynomial, x: float) -> float:
    """p_n(x) by compensated Horner."""
    return p(x)


def evaluate_derivative(p: TruncatedPolynomial, x: float) -> float:
    """p_n'(x) by compensated Horner on the derivative coefficients."""
    return p.derivative(x)


def tail_bound(alpha: float, n: int, x: float) -> float:
    """Geometric majorant of |p_inf(x) - p_n(x)|.

    The term ratios a_{k+1} x / a_k decrease in k, so the neglected tail is
    dominated by a_{n+1} x^{n+1} / (1 - q) with q the first neglected ratio.
    Raises :class:`BoundUnavailable` when q >= 1.
    """
    x = _check_x(x)
    if x == 0.0:
        return 0.0
    table = coefficients(alpha, n + 1)
    q = x * table.ratio(n + 1)
    if q >= 1.0:
        raise BoundUnavailable(
            f"first neglected term ratio {q:.6g} >= 1 at degree {n}; raise the degree"
        )
    log_term = table.log_values[n + 1] + (n + 1) * math.log(x)
    return math.exp(log_term) / (1.0 - q)


def degree_for_tolerance(alpha: float, x: float, tol: float, min_degree: int = 1,
                         cap: int = DEGREE_CAP) -> int:
    """Smallest degree >= ``min_degree`` whose tail bound at ``x`` is below ``tol``."""
    for n in range(min_degree, cap + 1):
        try:
            if tail_bound(alpha, n, x) < tol:
                return n
        except BoundUnavailable:
            continue
    raise BoundUnavailable(f"no degree <= {cap} reaches tail bound {tol:g} at x={x:g}")


@dataclass(frozen=True)
class SolutionCurve:
    """Truncated solution y_n(x) = b1 * x * p_n(lam * x^2) with y(0)=0, y'(0)=b1."""

    alpha: float
    lam: float
    b1: float = 1.0
    degree: int = 40

    def __post_init__(self):
        check_alpha(self.alpha)
        if not (math.isfinite(self.lam) and self.lam >= 0.0):
            raise DomainError(f"lambda must be finite and >= 0, got {self.lam!r}")
        if not math.isfinite(self.b1):
            raise DomainError(f"b1 must be finite, got {self.b1!r}")

    @property
    def poly(self) -> TruncatedPolynomial:
        return truncation(self.alpha, self.degree)

    def __call__(self, x: float) -> float:
        x = _check_x(x)
        return self.b1 * x * self.poly(self.lam * x * x)

    def slope(self, x: float) -> float:
        """y_n'(x)."""
        x = _check_x(x)
        u = self.lam * x * x
        p = self.poly
        return self.b1 * (p(u) + 2.0 * u * p.derivative(u))


def _check_residual_point(curve: SolutionCurve, x: float) -> float:
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"residual needs finite x > 0, got {x!r}")
    if curve.degree < 1:
        raise DomainError("residual needs degree >= 1")
    return x


def caputo_residual_closed(curve: SolutionCurve, x: float) -> float:
    """(-1)^n a_n lam^(n+1) x^(2n+2-alpha) b1, the telescoped residual."""
    x = _check_residual_point(curve, x)
    if curve.b1 == 0.0 or curve.lam == 0.0:
        return 0.0
    n, a = curve.degree, curve.alpha
    table = coefficients(a, n)
    log_mag = (table.log_values[n] + (n + 1) * math.log(curve.lam)
               + (2 * n + 2 - a) * math.log(x) + math.log(abs(curve.b1)))
    sign = (-1.0) ** n * math.copysign(1.0, curve.b1)
    return sign * math.exp(log_mag)


def caputo_residual_termwise(curve: SolutionCurve, x: float) -> float:
    """D^(1+alpha) y_n(x) + lam x^(1-alpha) y_n(x) summed term by term.

    Each monomial x^(2k+1) is differentiated with the Caputo power rule
    Gamma(2k+2)/Gamma(2k+1-alpha) x^(2k-alpha) (the k = 0 term vanishes).
    The sum cancels down to a tiny remainder, so it runs in mpmath with
    working precision sized to the cancellation.
    """
    x = _check_residual_point(curve, x)
    if curve.b1 == 0.0 or curve.lam == 0.0:
        return 0.0
    n, alpha = curve.degree, curve.alpha
    table = coefficients(alpha, n)
    lx, ll = math.log(x), math.log(curve.lam)
    peak = max(table.log_values[k] + k * ll + 2 * k * lx for k in range(n + 1))
    peak = max(peak, peak + ll + (1 - alpha) * lx)
    floor_ = table.log_values[n] + (n + 1) * ll + (2 * n + 2 - alpha) * lx
    digits = 30 + max(0, math.ceil((peak - floor_) / math.log(10)))
    with mpmath.workdps(digits):
        al = mpmath.mpf(alpha)
        lam = mpmath.mpf(curve.lam)
        xm = mpmath.mpf(x)
        ak = mpmath.mpf(1)
        frac = mpmath.mpf(0)
        y = xm  # k = 0 term of y_n / b1
        for k in range(1, n + 1):
            ak *= mpmath.gamma(2 * k + 1 - al) / mpmath.gamma(2 * k + 2)
            term = (-1) ** k * ak * lam ** k
            frac += term * mpmath.gamma(2 * k + 2) / mpmath.gamma(2 * k + 1 - al) * xm ** (2 * k - al)
            y += term * xm ** (2 * k + 1)
        total = (frac + lam * xm ** (1 - al) * y) * mpmath.mpf(curve.b1)
        return float(total)


def caputo_residual(curve: SolutionCurve, x: float) -> float:
    """Caputo residual of the truncated solution, summed term by term."""
    return caputo_residual_termwise(curve, x)
