import math
from math import comb
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenpoly.bernstein import bernstein2
from degenpoly.core import X
from degenpoly.degenerate import euler_number, euler_polynomial
from degenpoly.padic import (
    CapExceeded,
    PadicContext,
    PadicDomainError,
    alternating_power_sum,
    double_integral_check,
    double_integral_closed_form,
    double_sum,
    euler_integral_check,
    eval_poly,
    falling_integrand,
    fermionic_sum,
    functional_equation_check,
    shift_poly,
    valuation,
)


def brute_alternating(coeffs, count):
    return sum((eval_poly(coeffs, y) * (-1) ** y for y in range(count)), Fraction(0))


def test_valuation_examples():
    assert valuation(Fraction(1, 3), 3) == -1
    assert valuation(0, 5) == math.inf
    assert valuation(Fraction(18, 5), 3) == 2
    assert valuation(Fraction(-250, 7), 5) == 3


@pytest.mark.parametrize("p, N", [(3, 1), (3, 4), (5, 2), (7, 3)])
def test_fermionic_sum_of_constant(p, N):
    assert fermionic_sum([1], p, N) == 1


def test_fermionic_sum_of_identity():
    assert fermionic_sum([0, 1], 3, 1) == 1
    assert fermionic_sum([0, 1], 3, 2) == 4
    for p, N in [(5, 3), (7, 2), (3, 6)]:
        assert fermionic_sum([0, 1], p, N) == (p**N - 1) // 2


@pytest.mark.parametrize("m", range(9))
@pytest.mark.parametrize("count", [1, 2, 3, 8, 9, 25])
def test_alternating_power_sum_closed_form(m, count):
    expected = sum(Fraction((-1) ** y * y**m) for y in range(count))
    assert alternating_power_sum(m, count) == expected


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=12), min_size=1, max_size=6),
    st.sampled_from([3, 5, 7]),
    st.integers(1, 3),
)
def test_closed_and_direct_routes_agree(coeffs, p, N):
    assert fermionic_sum(coeffs, p, N) == fermionic_sum(coeffs, p, N, method="direct")


def test_direct_route_matches_brute_force():
    coeffs = falling_integrand(1, 3, Fraction(1, 2))
    assert fermionic_sum(coeffs, 3, 2, method="direct") == brute_alternating(coeffs, 9)


def test_fermionic_sum_accepts_univariate_mpoly():
    assert fermionic_sum(X ** 2 - 3 * X, 5, 2) == fermionic_sum([0, -3, 1], 5, 2)


def test_cap_and_prime_checks():
    with pytest.raises(CapExceeded):
        fermionic_sum([1], 3, 15)
    with pytest.raises(PadicDomainError):
        fermionic_sum([1], 9, 1)
    with pytest.raises(PadicDomainError):
        PadicContext(2, 3)
    with pytest.raises(CapExceeded):
        PadicContext(7, 9)


def test_shift_poly():
    coeffs = (Fraction(1), Fraction(-2), Fraction(0), Fraction(5))
    shifted = shift_poly(coeffs, 1)
    for y in range(-3, 4):
        assert eval_poly(shifted, y) == eval_poly(coeffs, y + 1)


# -- functional equation -------------------------------------------------------


def test_functional_equation_examples():
    for N in range(1, 4):
        assert functional_equation_check([1], 5, N) == (2, 2)
    assert functional_equation_check([0, 1], 3, 1) == (3, 3)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=12), min_size=1, max_size=6),
    st.sampled_from([3, 5, 7]),
    st.integers(1, 5),
)
def test_functional_equation_is_exact(coeffs, p, N):
    lhs, rhs = functional_equation_check(coeffs, p, N)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=6),
    st.sampled_from([3, 5, 7]),
    st.integers(1, 5),
)
def test_functional_equation_boundary_valuation(coeffs, p, N):
    _, rhs = functional_equation_check(coeffs, p, N)
    assert valuation(rhs - 2 * coeffs[0], p) >= N


# -- integral representation ----------------------------------------------------


def test_euler_integral_order_zero_is_exact():
    report = euler_integral_check(0, 1, 3, PadicContext(3, 4))
    assert report.valuations == [math.inf] * 4


def test_euler_integral_n1_valuation_exactly_N():
    report = euler_integral_check(1, 0, 0, PadicContext(3, 6))
    assert report.valuations == [1, 2, 3, 4, 5, 6]
    for row in report.rows:
        assert row.partial - row.limit == Fraction(3**row.N, 2)


def test_euler_integral_n2_x1_lambda3():
    # initial run gave valuation exactly N at every level, so C = 0 here
    report = euler_integral_check(2, 1, 3, PadicContext(3, 5))
    assert report.rows[0].limit == euler_polynomial(2, X).evaluate({"x": 1, "lambda": 3})
    assert report.meets_bound(0)


def test_euler_integral_routes_agree():
    ctx = PadicContext(5, 3)
    a = euler_integral_check(3, 2, 5, ctx)
    b = euler_integral_check(3, 2, 5, ctx, method="direct")
    assert a.rows == b.rows


def test_euler_integral_requires_integral_inputs():
    with pytest.raises(PadicDomainError):
        euler_integral_check(2, Fraction(1, 3), 0, PadicContext(3, 2))
    with pytest.raises(PadicDomainError):
        euler_integral_check(2, 0, Fraction(2, 5), PadicContext(5, 2))


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("n", range(1, 6))
def test_reflected_integrands_converge_together(p, n):
    # S_N[(1-y)_n] - S_N[(y+2)_n] -> 0 p-adically
    ctx = PadicContext(p, 4)
    lam = 1
    left = falling_integrand(1, n, lam, scale=-1)
    right = falling_integrand(2, n, lam)
    vals = [valuation(fermionic_sum(left, p, N) - fermionic_sum(right, p, N), p) for N in ctx.levels()]
    assert all(v >= N for v, N in zip(vals, ctx.levels()))


# -- double integrals ------------------------------------------------------------


def test_double_integral_examples():
    assert double_integral_closed_form(1, 1, 7) == Fraction(-1, 2)
    assert double_integral_closed_form(1, 2, 0) == Fraction(-3, 2)
    assert double_integral_closed_form(1, 2, 5) == Fraction(-3, 2)
    assert double_integral_closed_form(0, 0, 2) == 1
    report = double_integral_check(0, 0, 0, PadicContext(3, 3))
    assert [r.partial for r in report.rows] == [1, 1, 1]
    report = double_integral_check(1, 1, 1, PadicContext(3, 4))
    assert report.meets_bound(0)


def test_double_integral_closed_form_symbolic():
    assert double_integral_closed_form(2, 2) == euler_number(2)


@pytest.mark.parametrize("k, n", [(0, 2), (1, 2), (2, 3), (1, 4)])
def test_double_sum_closed_matches_brute_force(k, n):
    poly = bernstein2(k, n).value.substitute({"lambda": 3})
    for N in (1, 2):
        assert double_sum(poly, 3, N) == double_sum(poly, 3, N, method="direct")


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("lam", [0, 1, 2])
def test_double_sum_factorizes(p, lam):
    for n in range(5):
        for k in range(n + 1):
            poly = bernstein2(k, n).value.substitute({"lambda": lam})
            for N in (1, 2, 3):
                sx1 = fermionic_sum(falling_integrand(0, k, lam), p, N)
                sx2 = fermionic_sum(falling_integrand(1, n - k, lam, scale=-1), p, N)
                assert double_sum(poly, p, N) == comb(n, k) * sx1 * sx2


def test_double_integral_cap():
    with pytest.raises(CapExceeded):
        double_integral_check(1, 2, 0, PadicContext(3, 8))
