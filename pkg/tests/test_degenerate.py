from fractions import Fraction
from math import comb

import pytest

from degenpoly.core import LAM, X, X1, X2, MPoly, TruncSeries, series_mul
from degenpoly.degenerate import (
    degenerate_exp,
    euler_number,
    euler_number_series,
    euler_polynomial,
    euler_series,
    falling_basis,
    falling_factorial,
    fermionic_integral,
    higher_order_euler,
    higher_order_euler_number,
    negate_lambda,
)

half = Fraction(1, 2)


def classical_euler_coeffs(n):
    """Oracle: classical Euler polynomials from e_n(x) = x^n - 1/2 sum_{j<n} C(n,j) e_j(x).

    Coefficient lists, ascending in x; no dependence on the library.
    """
    table = []
    for m in range(n + 1):
        c = [Fraction(0)] * (m + 1)
        c[m] = Fraction(1)
        for j in range(m):
            for d, v in enumerate(table[j]):
                c[d] -= half * comb(m, j) * v
        table.append(c)
    return table


def as_mpoly(coeffs):
    return sum((c * X ** d for d, c in enumerate(coeffs)), MPoly())


def brute_falling(arg, n, sign=1):
    out = MPoly.const(1)
    for j in range(n):
        out = out * (arg - sign * j * LAM)
    return out


@pytest.mark.parametrize(
    "arg, n, expected",
    [
        (X, 0, MPoly.const(1)),
        (X, 3, X ** 3 - 3 * LAM * X ** 2 + 2 * LAM ** 2 * X),
        (1, 2, 1 - LAM),
    ],
)
def test_falling_factorial_examples(arg, n, expected):
    assert falling_factorial(arg, n) == expected


@pytest.mark.parametrize("n", range(8))
def test_falling_factorial_classical_limit(n):
    assert falling_factorial(X, n).substitute({"lambda": 0}) == X ** n


def test_falling_factorial_rejects_bad_input():
    with pytest.raises(ValueError):
        falling_factorial(X, -1)
    with pytest.raises(ValueError):
        falling_factorial(X, 2, sign=2)


def test_euler_numbers_hand_values():
    assert euler_number(0) == 1
    assert euler_number(1) == -half
    assert euler_number(2) == LAM / 2


def test_euler_polynomial_hand_values():
    assert euler_polynomial(1, X) == X - half
    assert euler_polynomial(2, X) == X ** 2 - (1 + LAM) * X + LAM / 2


@pytest.mark.parametrize("n", range(11))
def test_euler_polynomial_at_zero_is_number(n):
    assert euler_polynomial(n, 0) == euler_number(n)


def test_euler_numbers_satisfy_generating_function():
    # (2 / (e_lambda(t) + 1)) * (e_lambda(t) + 1) = 2, checked as truncated series
    order = 9
    e1 = degenerate_exp(1, order)
    prod = series_mul(euler_number_series(order), e1 + TruncSeries.unit(order))
    assert prod == TruncSeries.monomial(0, 2, order)


def test_generating_function_route_matches_convolution():
    order = 7
    for k in (1, 2, 3):
        series = euler_series(order, k, X)
        for n in range(order + 1):
            assert series[n] == higher_order_euler(k, n, X)


def test_higher_order_examples():
    for n in range(9):
        assert higher_order_euler(1, n, X) == euler_polynomial(n, X)
    for k in range(1, 5):
        assert higher_order_euler(k, 0, X) == 1
    assert higher_order_euler(2, 1, X) == X - 1
    assert higher_order_euler_number(0, 3) == 0


def test_degenerate_exp_examples():
    assert degenerate_exp(X, 2).coeffs == (MPoly.const(1), X, X ** 2 - LAM * X)
    assert degenerate_exp(0, 5).coeffs == (MPoly.const(1),) + (MPoly(),) * 5


def test_degenerate_exp_binomial_convolution():
    order = 6
    prod = series_mul(degenerate_exp(X1, order), degenerate_exp(X2, order))
    for m in range(order + 1):
        assert prod[m] == brute_falling(X1 + X2, m)


@pytest.mark.parametrize("n", range(13))
def test_reflection(n):
    sign = -1 if n % 2 else 1
    assert euler_polynomial(n, 1 - X) == negate_lambda(euler_polynomial(n, X)) * sign


@pytest.mark.parametrize("n", range(13))
def test_complement(n):
    sign = -1 if n % 2 else 1
    assert falling_factorial(1 - X, n) == falling_factorial(X - 1, n, sign=-1) * sign


@pytest.mark.parametrize("n", range(11))
def test_lambda_vandermonde(n):
    a, b = X1, 1 - X2
    rhs = sum(
        (brute_falling(a, j) * brute_falling(b, n - j) * comb(n, j) for j in range(n + 1)),
        MPoly(),
    )
    assert falling_factorial(a + b, n) == rhs


@pytest.mark.parametrize("n", range(13))
def test_boundary_sum(n):
    assert euler_polynomial(n, 1) + euler_number(n) == (2 if n == 0 else 0)


def test_classical_limit_against_recurrence_oracle():
    oracle = classical_euler_coeffs(10)
    for n in range(11):
        assert euler_polynomial(n, X).substitute({"lambda": 0}) == as_mpoly(oracle[n])


def test_oracle_satisfies_defining_relation():
    # e_n(x + 1) + e_n(x) = 2 x^n, checked on the oracle itself
    for n, coeffs in enumerate(classical_euler_coeffs(8)):
        p = as_mpoly(coeffs)
        assert p.substitute({"x": X + 1}) + p == 2 * X ** n


def test_negative_lambda_polynomial():
    for n in range(6):
        assert euler_polynomial(n, X, sign=-1) == negate_lambda(euler_polynomial(n, X))


def test_falling_basis_roundtrip():
    p = X ** 4 - 3 * X * LAM + X1 * X ** 2 + 7
    basis = falling_basis(p, "x")
    rebuilt = sum((c * falling_factorial(X, m) for m, c in basis.items()), MPoly())
    assert rebuilt == p


def test_fermionic_integral_of_shifted_falling_factorials():
    for n in range(7):
        assert fermionic_integral(falling_factorial(X + X1, n), "x") == euler_polynomial(n, X1)
