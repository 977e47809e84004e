"""Smallest positive root of a truncation: sign-scan bracketing plus bisection."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ._backend import kernels
from .errors import DomainError, InvalidBracket
from .series import TruncatedPolynomial
from .specialfn import gamma_ratio

__all__ = [
    "DEFAULT_TOL",
    "RootResult",
    "assumption_a_bound",
    "find_first_bracket",
    "refine",
    "smallest_positive_root",
]

DEFAULT_TOL = 1e-10
SCAN_CELLS = 1024
HALVING_LEVELS = 10
_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class RootResult:
    """A located smallest positive root r_n of p_n.

    ``p(bracket_lo) > 0 >= p(bracket_hi)``; an exact zero sits on the right
    endpoint.
    """

    value: float
    bracket_lo: float
    bracket_hi: float
    degree: int
    refine_tol: float
    iterations: int

    @property
    def width(self) -> float:
        return self.bracket_hi - self.bracket_lo


def assumption_a_bound(alpha: float, n: int) -> float:
    """Gamma(2n+6) / Gamma(2n+5-alpha), the default scan limit for degree n."""
    return gamma_ratio(2 * n + 6, 2 * n + 5 - alpha)


def find_first_bracket(p: TruncatedPolynomial, x_max: Optional[float] = None,
                       initial_step: Optional[float] = None,
                       levels: int = HALVING_LEVELS) -> Optional[Tuple[float, float]]:
    """First cell [a, b] in (0, x_max] with p(a) > 0 >= p(b), or None.

    The scan walks cells of width ``initial_step`` (default x_max/1024) and
    halves a cell up to ``levels`` times when its endpoint slopes show a
    local minimum, so dips narrower than a cell are still caught.
    """
    if x_max is None:
        x_max = assumption_a_bound(p.alpha, p.degree)
    if initial_step is None:
        initial_step = x_max / SCAN_CELLS
    if not (math.isfinite(x_max) and x_max > 0):
        raise DomainError(f"x_max must be finite and positive, got {x_max!r}")
    if not (math.isfinite(initial_step) and initial_step > 0):
        raise DomainError(f"initial_step must be finite and positive, got {initial_step!r}")
    return kernels.first_sign_change(p._c, p._d, float(x_max), float(initial_step), int(levels))


def refine(p: TruncatedPolynomial, bracket: Tuple[float, float],
           tol: float = DEFAULT_TOL) -> RootResult:
    """Bisect ``bracket`` down to width <= tol (or to adjacent doubles)."""
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (tol > 0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not (0.0 <= lo < hi) or not (p(lo) > 0.0 >= p(hi)):
        raise InvalidBracket(f"[{lo!r}, {hi!r}] is not a +/- sign-change bracket of p_{p.degree}")
    lo, hi, it = kernels.bisect(p._c, lo, hi, float(tol), _MAX_BISECTIONS)
    value = hi if p(hi) == 0.0 else 0.5 * (lo + hi)
    return RootResult(value, lo, hi, p.degree, max(hi - lo, 0.0), it)


def smallest_positive_root(p: TruncatedPolynomial, x_max: Optional[float] = None,
                           tol: float = DEFAULT_TOL,
                           initial_step: Optional[float] = None) -> Optional[RootResult]:
    """r_n, or None when p_n has no sign change in (0, x_max]."""
    bracket = find_first_bracket(p, x_max, initial_step)
    if bracket is None:
        return None
    return refine(p, bracket, tol)
