import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracbuckle.errors import BoundUnavailable, DomainError
from fracbuckle.series import (SolutionCurve, caputo_residual, caputo_residual_closed,
                               caputo_residual_termwise, degree_for_tolerance, evaluate,
                               evaluate_derivative, tail_bound, truncation)
from fracbuckle.specialfn import coefficients

import oracles

PI2 = math.pi ** 2
alphas = st.floats(min_value=0.05, max_value=1.0)


def sinc_sqrt(x):
    if x == 0:
        return 1.0
    r = math.sqrt(x)
    return math.sin(r) / r


@settings(max_examples=40, deadline=None)
@given(alphas, st.integers(min_value=0, max_value=60))
def test_structure_alternates_and_starts_at_one(alpha, n):
    p = truncation(alpha, n)
    table = coefficients(alpha, n)
    assert p.coeffs[0] == 1.0
    assert evaluate(p, 0.0) == 1.0
    for k, c in enumerate(p.coeffs):
        assert abs(c) == table[k]
        if table[k] > 0:
            assert (c > 0) == (k % 2 == 0)


def test_p1_root_at_table_value():
    p = truncation(0.526, 1)
    assert abs(evaluate(p, 1 / coefficients(0.526, 1)[1])) < 1e-15


def test_classic_case_root():
    assert abs(evaluate(truncation(1.0, 60), PI2)) < 1e-10


def test_classic_case_closed_form():
    p = truncation(1.0, 60)
    for i in range(501):
        x = 50.0 * i / 500
        assert abs(p(x) - sinc_sqrt(x)) < 1e-12


def test_eval_against_high_precision():
    for alpha, n, x in [(0.527, 12, 17.3), (0.6, 40, 30.0), (0.526, 21, 72.86)]:
        ref = float(oracles.poly(alpha, n, x))
        p = truncation(alpha, n)
        scale = p.abs_sum(x)
        assert abs(p(x) - ref) <= 1e-12 * max(scale, 1.0) + 1e-15 * abs(ref)


def exact_eval(coeffs, x):
    with mp.workdps(80):
        acc = mp.mpf(0)
        for c in reversed(coeffs):
            acc = acc * mp.mpf(x) + mp.mpf(c)
        return acc


def test_compensated_evaluation_is_faithful_near_root():
    # near s0 the terms reach ~6 while the sum is ~1e-14: plain Horner keeps
    # only a few digits, compensated Horner is exact for the stored coefficients
    p = truncation(0.527, 14)
    for x in (17.309611107, 17.3096111072214, 17.31, 17.30956):
        ref = exact_eval(p.coeffs, x)
        assert abs(p(x) - float(ref)) <= 2e-16 * abs(float(ref)) + 1e-30


def test_derivative_of_linear_is_constant():
    p = truncation(0.37, 1)
    a1 = coefficients(0.37, 1)[1]
    for x in (0.0, 1.0, 123.0):
        assert evaluate_derivative(p, x) == -a1


def test_derivative_sign_near_first_root():
    assert evaluate_derivative(truncation(0.527, 12), 17.0) < 0


def test_derivative_classic_closed_form():
    # d/dx sin(sqrt x)/sqrt x at pi^2 equals cos(pi)/(2 pi^2)
    assert evaluate_derivative(truncation(1.0, 60), PI2) == pytest.approx(
        -0.050660591821168885722, rel=1e-12)


def test_non_finite_or_negative_input_rejected():
    p = truncation(0.5, 4)
    for bad in (float("nan"), float("inf"), -1.0):
        with pytest.raises(DomainError):
            p(bad)
        with pytest.raises(DomainError):
            p.derivative(bad)


def test_tail_bound_examples():
    assert tail_bound(0.4, 10, 0.0) == 0.0
    # a_61 pi^122 / (1 - q) with a_61 = 1/123!
    b = tail_bound(1.0, 60, PI2)
    assert b < 1e-40
    assert b == pytest.approx(3.6969e-145, rel=1e-3)


def test_tail_bound_unavailable():
    with pytest.raises(BoundUnavailable):
        tail_bound(0.5, 1, 50.0)


@pytest.mark.parametrize("alpha", [0.527, 0.6, 0.8, 1.0])
@pytest.mark.parametrize("n", [12, 15, 20, 30])
def test_tail_bound_dominates_high_degree_proxy(alpha, n):
    from fracbuckle.rootfind import smallest_positive_root
    r = smallest_positive_root(truncation(alpha, 12)).value
    proxy = truncation(alpha, 200)
    p = truncation(alpha, n)
    c = oracles.coeffs(alpha, 200)
    for i in range(1, 41):
        x = r * i / 40
        # oracle difference summed from its own terms (no cancellation)
        with mp.workdps(60):
            diff = float(mp.fsum((-1) ** k * c[k] * mp.mpf(x) ** k for k in range(n + 1, 201)))
        assert abs(diff) <= tail_bound(alpha, n, x) * (1 + 1e-9)
        assert abs(proxy(x) - p(x)) <= tail_bound(alpha, n, x) + 1e-15


def test_degree_for_tolerance():
    n = degree_for_tolerance(1.0, PI2, 1e-12)
    assert tail_bound(1.0, n, PI2) < 1e-12
    assert tail_bound(1.0, n - 1, PI2) >= 1e-12


def test_interlacing_with_proxy_oracle():
    # p_13 < p_200 < p_12 on (0, r_12], compared through exact differences
    alpha = 0.527
    from fracbuckle.rootfind import smallest_positive_root
    r12 = smallest_positive_root(truncation(alpha, 12)).value
    c = oracles.coeffs(alpha, 200)
    with mp.workdps(60):
        for i in range(1, 101):
            x = mp.mpf(r12) * i / 100
            terms = [(-1) ** k * c[k] * x ** k for k in range(201)]
            p12, p13, p200 = mp.fsum(terms[:13]), mp.fsum(terms[:14]), mp.fsum(terms)
            assert p13 < p200 < p12


def test_solution_curve_initial_conditions():
    c = SolutionCurve(0.6, 3.0, 2.5, 20)
    assert c(0.0) == 0.0
    assert c.slope(0.0) == 2.5


def test_residual_closed_and_termwise_agree():
    c = SolutionCurve(0.6, 1.0, 1.0, 12)
    a, b = caputo_residual_termwise(c, 1.7), caputo_residual_closed(c, 1.7)
    assert a == pytest.approx(b, rel=1e-10)
    assert caputo_residual(c, 1.7) == a


def test_residual_identity_random_tuples():
    rng = random.Random(20240611)
    for _ in range(100):
        alpha = rng.uniform(0.05, 1.0)
        n = rng.randint(1, 40)
        lam = rng.uniform(0.1, 20.0)
        x = rng.uniform(0.05, 2.0)
        c = SolutionCurve(alpha, lam, rng.uniform(-3, 3), n)
        assert caputo_residual_termwise(c, x) == pytest.approx(
            caputo_residual_closed(c, x), rel=1e-10)


def test_residual_decays_with_degree():
    r10 = caputo_residual_closed(SolutionCurve(0.6, 1.0, 1.0, 10), 1.0)
    r20 = caputo_residual_closed(SolutionCurve(0.6, 1.0, 1.0, 20), 1.0)
    assert abs(r20 / r10) < 1e-6


def test_residual_zero_solution():
    c = SolutionCurve(0.6, 2.0, 0.0, 8)
    for x in (0.1, 1.0, 3.0):
        assert caputo_residual(c, x) == 0.0
        assert caputo_residual_closed(c, x) == 0.0


def test_residual_domain():
    c = SolutionCurve(0.6, 2.0, 1.0, 8)
    with pytest.raises(DomainError):
        caputo_residual(c, 0.0)
    with pytest.raises(DomainError):
        caputo_residual(SolutionCurve(0.6, 2.0, 1.0, 0), 1.0)
