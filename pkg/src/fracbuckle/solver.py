"""Certified approximation of s0, the first positive root of p_inf.

Once an even n0 has a root r_n0 under the Assumption A bound, odd roots
increase to s0 and even roots decrease to it, so for even n the pair
(r_{n+1}, r_n) brackets s0. The driver walks even n upward from n0 until
|r_n - r_{n+1}| < eps and returns r_n.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from .analysis import (AssumptionReport, ExistenceReport, check_assumption_A,
                       check_assumption_B, nonexistence_evidence)
from .errors import DomainError, FracBuckleError, NoRootFound, NotConverged
from .rootfind import DEFAULT_TOL, smallest_positive_root
from .series import truncation
from .specialfn import check_alpha

__all__ = [
    "DEFAULT_EPSILON",
    "DEFAULT_MAX_DEGREE",
    "S0Approximation",
    "SweepEntry",
    "approximate_s0",
    "sweep_alpha",
]

DEFAULT_EPSILON = 1e-6
DEFAULT_MAX_DEGREE = 40
CERTIFIED = "certified"
HEURISTIC = "heuristic"


@dataclass(frozen=True)
class S0Approximation:
    alpha: float
    value: float
    epsilon: float
    degree_used: int
    n0: int
    assumption_a: AssumptionReport
    assumption_b: AssumptionReport
    root_sequence: Tuple[Tuple[int, float], ...]
    gap: float
    certificate: str = CERTIFIED
    root_tol: float = DEFAULT_TOL
    skipped_degrees: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def certified(self) -> bool:
        return self.certificate == CERTIFIED

    def root(self, n: int) -> float:
        return dict(self.root_sequence)[n]

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "value": self.value,
            "epsilon": self.epsilon,
            "gap": self.gap,
            "degree_used": self.degree_used,
            "n0": self.n0,
            "certificate": self.certificate,
            "root_tol": self.root_tol,
            "skipped_degrees": list(self.skipped_degrees),
            "root_sequence": [{"degree": n, "root": r} for n, r in self.root_sequence],
            "assumption_a": self.assumption_a.to_dict(),
            "assumption_b": self.assumption_b.to_dict(),
        }


def _root(alpha, n, tol):
    hit = smallest_positive_root(truncation(alpha, n), tol=tol)
    return None if hit is None else hit.value


def approximate_s0(alpha: float, epsilon: float = DEFAULT_EPSILON,
                   max_degree: int = DEFAULT_MAX_DEGREE,
                   root_tol: Optional[float] = None,
                   grid_points: int = 1000) -> S0Approximation:
    """Approximate s0 to within ``epsilon``.

    Raises :class:`NoRootFound` when no even truncation up to ``max_degree``
    has a root satisfying Assumption A, and :class:`NotConverged` when the
    stopping test is not met before ``max_degree``. A failed Assumption B
    check still returns a result, with ``certificate == "heuristic"``.
    """
    alpha = check_alpha(alpha)
    if not (epsilon > 0 and math.isfinite(epsilon)):
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    if root_tol is None:
        root_tol = min(DEFAULT_TOL, epsilon / 100.0)
    if not (0 < root_tol <= epsilon / 100.0):
        raise DomainError(f"root_tol must lie in (0, epsilon/100], got {root_tol!r}")
    if max_degree < 3:
        raise DomainError("max_degree must be >= 3")

    skipped = []
    n0 = None
    for n in range(2, max_degree, 2):
        r = _root(alpha, n, root_tol)
        if r is not None and check_assumption_A(alpha, n, r).holds:
            n0, r_n0 = n, r
            break
        skipped.append(n)
    if n0 is None:
        raise NoRootFound(f"no even truncation up to degree {max_degree} has a root "
                          f"under its Assumption A bound (alpha={alpha})",
                          alpha=alpha, max_degree=max_degree, skipped=skipped)

    roots = {n0: r_n0}
    n = n0
    while True:
        if n + 1 > max_degree:
            raise NotConverged(f"|r_n - r_(n+1)| >= {epsilon:g} for every even n "
                               f"up to max_degree={max_degree} (alpha={alpha})")
        for m in (n, n + 1):
            if m not in roots:
                r = _root(alpha, m, root_tol)
                if r is None:
                    raise NotConverged(f"p_{m} lost its root below the scan bound (alpha={alpha})")
                roots[m] = r
        gap = abs(roots[n] - roots[n + 1])
        if gap < epsilon:
            break
        n += 2

    report_a = check_assumption_A(alpha, n0, r_n0)
    report_b = check_assumption_B(alpha, n0, min(roots[n0 + 1], r_n0), r_n0, grid_points)
    certificate = CERTIFIED if (report_a.holds and report_b.holds) else HEURISTIC
    return S0Approximation(
        alpha=alpha,
        value=roots[n],
        epsilon=float(epsilon),
        degree_used=n,
        n0=n0,
        assumption_a=report_a,
        assumption_b=report_b,
        root_sequence=tuple(sorted(roots.items())),
        gap=gap,
        certificate=certificate,
        root_tol=root_tol,
        skipped_degrees=tuple(skipped),
    )


@dataclass(frozen=True)
class SweepEntry:
    alpha: float
    result: Union[S0Approximation, ExistenceReport, None]
    error: Optional[str] = None

    @property
    def verdict(self) -> str:
        if isinstance(self.result, S0Approximation):
            return "exists"
        if isinstance(self.result, ExistenceReport):
            return self.result.verdict
        return "error"


def _sweep_one(args) -> SweepEntry:
    alpha, epsilon, max_degree, root_tol = args
    try:
        return SweepEntry(alpha, approximate_s0(alpha, epsilon, max_degree, root_tol))
    except NoRootFound:
        evidence_tol = root_tol if root_tol is not None else DEFAULT_TOL
        return SweepEntry(alpha, nonexistence_evidence(alpha, max_degree, evidence_tol))
    except FracBuckleError as exc:
        return SweepEntry(alpha, None, f"{type(exc).__name__}: {exc}")


def sweep_alpha(alphas, epsilon: float = DEFAULT_EPSILON,
                max_degree: int = DEFAULT_MAX_DEGREE,
                root_tol: Optional[float] = None, workers: int = 1) -> list:
    """One :class:`SweepEntry` per alpha, in input order.

    Failures are captured per entry; the sweep itself never aborts. With
    ``workers > 1`` entries run in separate processes.
    """
    jobs = [(float(a), epsilon, max_degree, root_tol) for a in alphas]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_one, jobs))
    return [_sweep_one(j) for j in jobs]
