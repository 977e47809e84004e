"""Machine checks of the existence hypotheses and the non-existence evidence.

Assumption A (even n0 with first root r_n0):
    Gamma(2n0+6) / Gamma(2n0+5-alpha) >= r_n0
Assumption B:
    p_n0' <= 0 on [r_{n0+1}, r_n0]  and  (n0+1)/(n0+2) * Gamma(2n0+6)/Gamma(2n0+5-alpha) >= r_n0
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from .errors import BoundUnavailable, DomainError, FracBuckleError
from .rootfind import DEFAULT_TOL, assumption_a_bound, smallest_positive_root
from .series import DEGREE_CAP, tail_bound, truncation
from .specialfn import check_alpha, coefficients, log_gamma

__all__ = [
    "AssumptionReport",
    "ExistenceReport",
    "InconclusiveCheck",
    "OddRootEntry",
    "check_assumption_A",
    "check_assumption_B",
    "interlacing_violations",
    "lemma_monotonicity_violations",
    "nonexistence_evidence",
    "verify_interlacing",
    "verify_lemma_monotonicity",
]

EXISTS = "exists"
NO_EVIDENCE = "no-evidence-of-root"
INCONCLUSIVE = "inconclusive"


class InconclusiveCheck(FracBuckleError):
    """The tail-bound slack is larger than the gap a check needs to resolve."""


@dataclass(frozen=True)
class AssumptionReport:
    which: str
    alpha: float
    n0: int
    holds: bool
    margin: float
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _check_even(n0: int) -> int:
    if int(n0) != n0 or n0 < 0 or n0 % 2:
        raise DomainError(f"n0 must be a non-negative even integer, got {n0!r}")
    return int(n0)


def check_assumption_A(alpha: float, n0: int, r_n0: float) -> AssumptionReport:
    alpha = check_alpha(alpha)
    n0 = _check_even(n0)
    bound = assumption_a_bound(alpha, n0)
    margin = bound - r_n0
    return AssumptionReport("A", alpha, n0, margin >= 0.0, margin,
                            {"bound": bound, "root": float(r_n0)})


def check_assumption_B(alpha: float, n0: int, r_lo: float, r_hi: float,
                       grid_points: int = 1000) -> AssumptionReport:
    """Grid check of p_n0' <= 0 on [r_lo, r_hi] plus the scaled Gamma bound.

    Sampling is evidence only; it does not certify the sign between nodes.
    """
    alpha = check_alpha(alpha)
    n0 = _check_even(n0)
    if not (math.isfinite(r_lo) and math.isfinite(r_hi) and 0.0 <= r_lo <= r_hi):
        raise DomainError(f"invalid interval [{r_lo!r}, {r_hi!r}]")
    if grid_points < 2:
        raise DomainError("grid_points must be >= 2")
    if r_lo == r_hi:
        xs = [float(r_lo)]
    else:
        step = (r_hi - r_lo) / (grid_points - 1)
        xs = [r_lo + i * step for i in range(grid_points - 1)] + [float(r_hi)]
    slopes = truncation(alpha, n0).derivative_many(xs)
    worst = max(slopes)
    derivative_ok = worst <= 0.0
    ratio_term = (n0 + 1) / (n0 + 2) * assumption_a_bound(alpha, n0)
    margin = ratio_term - r_hi
    return AssumptionReport(
        "B", alpha, n0, derivative_ok and margin >= 0.0, margin,
        {
            "ratio_term": ratio_term,
            "root": float(r_hi),
            "interval": [float(r_lo), float(r_hi)],
            "grid_points": len(xs),
            "max_derivative": worst,
            "derivative_ok": derivative_ok,
        },
    )


def _log_f(alpha: float, x: int) -> float:
    # Gamma(x+1) / Gamma(x-alpha); 1/Gamma(0) = 0 at x = alpha = 1
    if x - alpha <= 0.0:
        return -math.inf
    return log_gamma(x + 1) - log_gamma(x - alpha)


def _log_g(alpha: float, x: int) -> float:
    return (math.log(x) + log_gamma(2 * x + 4)
            - math.log(x + 1) - log_gamma(2 * x + 3 - alpha))


def lemma_monotonicity_violations(alpha: float, k_max: int) -> List[Tuple[str, int]]:
    """Integer points k in 1..k_max-1 where f or g fails to increase to k+1.

    f(x) = Gamma(x+1)/Gamma(x-alpha),  g(x) = x Gamma(2x+4) / ((x+1) Gamma(2x+3-alpha)).
    """
    alpha = check_alpha(alpha)
    if k_max < 2:
        raise DomainError("k_max must be >= 2")
    bad = []
    for name, fn in (("f", _log_f), ("g", _log_g)):
        prev = fn(alpha, 1)
        for k in range(2, k_max + 1):
            cur = fn(alpha, k)
            if not cur > prev:
                bad.append((name, k - 1))
            prev = cur
    return bad


def verify_lemma_monotonicity(alpha: float, k_max: int = 200) -> bool:
    return not lemma_monotonicity_violations(alpha, k_max)


def _difference(table, lo_deg: int, hi_deg: int, x: float) -> float:
    """p_hi(x) - p_lo(x) summed from its own terms, no cancellation of p values."""
    sign = 1.0
    if hi_deg < lo_deg:
        lo_deg, hi_deg, sign = hi_deg, lo_deg, -1.0
    lx = math.log(x)
    terms = [(-1.0) ** k * math.exp(table.log_values[k] + k * lx)
             for k in range(lo_deg + 1, hi_deg + 1)]
    return sign * math.fsum(terms)


def _proxy_slack(alpha: float, proxy_degree: int, x: float) -> float:
    try:
        return tail_bound(alpha, proxy_degree, x)
    except BoundUnavailable:
        return math.inf


def interlacing_violations(alpha: float, n0: int, proxy_degree: int = DEGREE_CAP,
                           grid_points: int = 1000, depth: int = 2,
                           r_n0: Optional[float] = None) -> List[Tuple[int, int, float]]:
    """Grid points where the interlacing chain

        p_{n0+1} < p_{n0+3} < ... < p_proxy < ... < p_{n0+2} < p_{n0}

    fails on (0, r_n0]. ``depth`` is the number of truncations on each side of
    the proxy. Links touching the proxy must clear its tail bound; a link that
    is positive but inside the slack raises :class:`InconclusiveCheck`.
    """
    alpha = check_alpha(alpha)
    n0 = _check_even(n0)
    if proxy_degree < n0 + 20:
        raise DomainError("proxy_degree must be >= n0 + 20")
    if r_n0 is None:
        found = smallest_positive_root(truncation(alpha, n0), tol=DEFAULT_TOL)
        if found is None:
            raise DomainError(f"p_{n0} has no positive root below its bound at alpha={alpha}")
        r_n0 = found.value
    if not check_assumption_A(alpha, n0, r_n0).holds:
        raise DomainError(f"Assumption A fails for n0={n0} at alpha={alpha}")
    odd = [n0 + 2 * i + 1 for i in range(depth)]
    even = [n0 + 2 * i for i in reversed(range(depth))]
    chain = odd + [proxy_degree] + even
    table = coefficients(alpha, proxy_degree)
    bad = []
    for i in range(1, grid_points + 1):
        x = r_n0 * i / grid_points
        slack = _proxy_slack(alpha, proxy_degree, x)
        for lo_deg, hi_deg in zip(chain, chain[1:]):
            gap = _difference(table, lo_deg, hi_deg, x)
            need = slack if proxy_degree in (lo_deg, hi_deg) else 0.0
            if gap > need:
                continue
            if gap > 0.0:
                raise InconclusiveCheck(
                    f"gap {gap:.3g} between p_{lo_deg} and p_{hi_deg} at x={x:.6g} "
                    f"is inside the tail bound {slack:.3g}")
            bad.append((lo_deg, hi_deg, x))
    return bad


def verify_interlacing(alpha: float, n0: int, proxy_degree: int = DEGREE_CAP,
                       grid_points: int = 1000, depth: int = 2) -> bool:
    return not interlacing_violations(alpha, n0, proxy_degree, grid_points, depth)


@dataclass(frozen=True)
class OddRootEntry:
    m: int
    root: Optional[float]
    bound: float
    condition_ok: bool


@dataclass(frozen=True)
class ExistenceReport:
    alpha: float
    max_degree_checked: int
    even_root_found: Optional[Tuple[int, float]]
    odd_roots: Tuple[OddRootEntry, ...]
    verdict: str
    even_degrees_without_root: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["even_root_found"] = (
            None if self.even_root_found is None
            else {"degree": self.even_root_found[0], "root": self.even_root_found[1]}
        )
        d["odd_roots"] = [asdict(e) for e in self.odd_roots]
        d["even_degrees_without_root"] = list(self.even_degrees_without_root)
        return d


def odd_root_entry(alpha: float, m: int, tol: float = DEFAULT_TOL) -> OddRootEntry:
    """r_m with the non-existence bound Gamma(2m+6)/Gamma(2m+5-alpha)."""
    p = truncation(alpha, m)
    bound = assumption_a_bound(alpha, m)
    hit = smallest_positive_root(p, bound, tol)
    if hit is not None:
        return OddRootEntry(m, hit.value, bound, True)
    # odd degree always has a root; look past the bound to report it
    hit = smallest_positive_root(p, 4.0 * bound, tol)
    return OddRootEntry(m, None if hit is None else hit.value, bound, False)


def nonexistence_evidence(alpha: float, max_degree: int = 40,
                          tol: float = DEFAULT_TOL) -> ExistenceReport:
    """Collect odd roots against their bounds and look for an even-degree root.

    ``no-evidence-of-root`` means every odd root sits below its bound (so p_inf
    has no root up to it) and no even truncation up to ``max_degree`` has a
    root; it is evidence of absence, not proof.
    """
    alpha = check_alpha(alpha)
    if max_degree < 3:
        raise DomainError("max_degree must be >= 3")
    odd = []
    even_hit = None
    no_root = []
    for m in range(1, max_degree + 1):
        if m % 2:
            odd.append(odd_root_entry(alpha, m, tol))
        elif even_hit is None:
            hit = smallest_positive_root(truncation(alpha, m), tol=tol)
            if hit is None:
                no_root.append(m)
            else:
                even_hit = (m, hit.value)
    if even_hit is not None:
        verdict = EXISTS
    elif all(e.condition_ok for e in odd):
        verdict = NO_EVIDENCE
    else:
        verdict = INCONCLUSIVE
    return ExistenceReport(alpha, max_degree, even_hit, tuple(odd), verdict, tuple(no_root))

