import math

import pytest

from fracbuckle.analysis import (EXISTS, NO_EVIDENCE, check_assumption_A, check_assumption_B,
                                 interlacing_violations, lemma_monotonicity_violations,
                                 nonexistence_evidence, odd_root_entry, verify_interlacing,
                                 verify_lemma_monotonicity)
from fracbuckle.errors import DomainError
from fracbuckle.rootfind import assumption_a_bound, smallest_positive_root
from fracbuckle.series import truncation
from fracbuckle.specialfn import log_gamma

LEMMA_ALPHAS = (0.1, 0.3, 0.5, 0.526, 0.527, 0.7, 0.9, 1.0)
R12 = 17.31407406


def test_assumption_a_bound_value():
    rep = check_assumption_A(0.527, 12, R12)
    assert rep.holds
    assert rep.details["bound"] == pytest.approx(168.65, abs=0.05)
    assert rep.margin == pytest.approx(rep.details["bound"] - R12)


def test_assumption_a_edges():
    assert check_assumption_A(0.527, 12, 0.0).holds
    assert not check_assumption_A(0.527, 12, 1000.0).holds
    with pytest.raises(DomainError):
        check_assumption_A(0.527, 13, R12)
    with pytest.raises(DomainError):
        check_assumption_A(1.5, 12, R12)


def test_assumption_b_values():
    rep = check_assumption_B(0.527, 12, 17.30, 17.31)
    assert rep.holds
    assert rep.details["ratio_term"] == pytest.approx(156.6, abs=0.05)
    assert rep.details["ratio_term"] == pytest.approx(
        13 / 14 * math.exp(log_gamma(30) - log_gamma(28.473)), rel=1e-12)
    assert rep.details["derivative_ok"]
    wide = check_assumption_B(0.527, 12, 16.0, 17.5)
    assert wide.details["max_derivative"] < 0


def test_assumption_b_degenerate_and_invalid():
    rep = check_assumption_B(0.527, 12, 17.31, 17.31)
    assert rep.details["grid_points"] == 1
    with pytest.raises(DomainError):
        check_assumption_B(0.527, 12, 17.4, 17.3)
    with pytest.raises(DomainError):
        check_assumption_B(0.527, 12, 17.3, float("nan"))


def test_assumption_b_fails_far_out():
    # the ratio term caps the interval
    assert not check_assumption_B(0.527, 12, 157.0, 160.0).holds


@pytest.mark.parametrize("alpha", LEMMA_ALPHAS)
def test_lemma_monotonicity(alpha):
    assert lemma_monotonicity_violations(alpha, 200) == []
    assert verify_lemma_monotonicity(alpha)


def test_lemma_f_closed_form():
    # alpha = 1: f(x) = Gamma(x+1)/Gamma(x-1) = x(x-1); f(2)/f(1) is infinite, f(3)/f(2) = 3
    from fracbuckle.analysis import _log_f
    assert _log_f(1.0, 1) == -math.inf
    assert math.exp(_log_f(1.0, 3) - _log_f(1.0, 2)) == pytest.approx(3.0, rel=1e-13)
    # alpha = 0: f(x) = x, so f(2)/f(1) = 2; alpha -> 0 from above approaches it
    assert math.exp(_log_f(1e-12, 2) - _log_f(1e-12, 1)) == pytest.approx(2.0, rel=1e-9)


def test_interlacing_zero_violations():
    assert interlacing_violations(0.527, 12, 200, 1000, depth=3) == []
    assert verify_interlacing(1.0, 6)


def test_interlacing_rejects_bad_arguments():
    with pytest.raises(DomainError):
        interlacing_violations(0.527, 13)
    with pytest.raises(DomainError):
        interlacing_violations(0.527, 12, proxy_degree=20)


def test_odd_root_entry_linear():
    e = odd_root_entry(0.526, 1)
    assert e.condition_ok
    assert e.root == pytest.approx(4.5960269983106533, rel=1e-10)
    assert e.bound == pytest.approx(assumption_a_bound(0.526, 1))


def test_nonexistence_evidence_boundary():
    rep = nonexistence_evidence(0.526, 40)
    assert rep.verdict == NO_EVIDENCE
    assert rep.even_root_found is None
    assert rep.even_degrees_without_root == tuple(range(2, 41, 2))
    bounds = [e.bound for e in rep.odd_roots]
    assert all(a < b for a, b in zip(bounds, bounds[1:]))
    roots = [e.root for e in rep.odd_roots]
    assert all(a < b for a, b in zip(roots, roots[1:]))
    assert rep.to_dict()["even_root_found"] is None

    rep = nonexistence_evidence(0.527, 40)
    assert rep.verdict == EXISTS
    assert rep.even_root_found[0] == 12
    assert rep.even_root_found[1] == pytest.approx(R12, abs=1e-6)


def test_nonexistence_classic():
    rep = nonexistence_evidence(1.0, 10)
    assert rep.verdict == EXISTS
    assert rep.even_root_found[0] == 4


def test_table1_bounds():
    expected = [18.3, 37.3, 60.6, 87.5, 117.5, 150.5, 186.2, 224.5, 265.1, 308.0, 353.1]
    got = [assumption_a_bound(0.526, m) for m in range(1, 22, 2)]
    for g, e in zip(got, expected):
        assert abs(g - e) <= 0.1


def test_even_root_below_bound_implies_a_holds():
    r = smallest_positive_root(truncation(0.527, 12)).value
    assert check_assumption_A(0.527, 12, r).holds
