from fractions import Fraction
from math import comb, factorial

import pytest

from degenpoly.bernstein import (
    OperatorInput,
    bernstein,
    bernstein2,
    bernstein_genfun_check,
    moment_extract,
    operator,
    partial_fractions,
)
from degenpoly.core import LAM, X, X1, X2, LinRational, MPoly

ONE_F = OperatorInput.poly([1])
T_F = OperatorInput.poly([0, 1])
T2_F = OperatorInput.poly([0, 0, 1])


def ff(arg, n):
    # direct product, independent of the library's cached factorials
    out = MPoly.const(1)
    for j in range(n):
        out = out * (arg - j * LAM)
    return out


def test_bernstein_examples():
    assert bernstein(0, 0).value == 1
    assert bernstein(2, 1).value.is_zero()
    assert bernstein(1, 2).value == 2 * X * (1 - X)
    assert bernstein(1, 3).value == 3 * X * (1 - X) * (1 - X - LAM)


def test_bernstein2_examples():
    assert bernstein2(1, 2).value == 2 * X1 * (1 - X2)
    assert bernstein2(1, 1).value == X1
    assert bernstein2(3, 2).value.is_zero()


@pytest.mark.parametrize("n", range(9))
def test_two_variable_specializes_to_one_variable(n):
    for k in range(n + 1):
        assert bernstein2(k, n).value.substitute({"x1": X, "x2": X}) == bernstein(k, n).value


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        bernstein(-1, 2)


@pytest.mark.parametrize("k, order", [(0, 6), (1, 6), (2, 7), (3, 2), (4, 9)])
def test_generating_function(k, order):
    assert bernstein_genfun_check(k, order)


@pytest.mark.parametrize("n", range(11))
def test_symmetry(n):
    for k in range(n + 1):
        mirrored = bernstein2(n - k, n).value.substitute({"x1": 1 - X2, "x2": 1 - X1})
        assert bernstein2(k, n).value == mirrored


@pytest.mark.parametrize("n", range(1, 11))
def test_recurrence(n):
    for k in range(1, n + 1):
        lhs = (1 - X2 - (n - k - 1) * LAM) * bernstein2(k, n - 1).value \
            + (X1 - (k - 1) * LAM) * bernstein2(k - 1, n - 1).value
        assert lhs == bernstein2(k, n).value


@pytest.mark.parametrize("n", range(11))
def test_partition_of_unity_analogue(n):
    total = sum((bernstein2(k, n).value for k in range(n + 1)), MPoly())
    assert total == ff(1 + X1 - X2, n)
    one_var = sum((bernstein(k, n).value for k in range(n + 1)), MPoly())
    assert one_var == ff(MPoly.const(1), n)


@pytest.mark.parametrize("n", range(11))
def test_classical_limit(n):
    for k in range(n + 1):
        assert bernstein(k, n).value.substitute({"lambda": 0}) == comb(n, k) * X ** k * (1 - X) ** (n - k)


# -- operator -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(9))
def test_operator_on_constant(n):
    assert operator(n, ONE_F) == ff(1 + X1 - X2, n)


@pytest.mark.parametrize("n", range(1, 9))
def test_operator_on_t(n):
    assert operator(n, T_F) == ff(X1, 1) * ff(X1 + 1 - LAM - X2, n - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_operator_on_t_squared(n):
    closed = Fraction(1, n) * ff(X1, 1) * ff(1 + X1 - LAM - X2, n - 1) \
        + Fraction(n - 1, n) * ff(X1, 2) * ff(1 + X1 - 2 * LAM - X2, n - 2)
    assert operator(n, T2_F) == closed


def test_operator_t_squared_order_two_classical():
    assert operator(2, T2_F, X, X).substitute({"lambda": 0}) == X / 2 + X ** 2 / 2


def test_operator_specialization_paths_agree():
    for n in range(6):
        direct = operator(n, T2_F).substitute({"x1": X, "x2": X, "lambda": Fraction(1, 3)})
        assert operator(n, T2_F, X, X, Fraction(1, 3)) == direct
        assert operator(n, T2_F, X, X) == operator(n, T2_F).substitute({"x1": X, "x2": X})


def test_operator_with_node_table():
    for n in range(1, 6):
        table = T2_F.node_table(n)
        assert table.kind == "node_values"
        assert operator(n, table) == operator(n, T2_F)


def test_operator_node_table_length_checked():
    with pytest.raises(ValueError):
        operator(3, OperatorInput.nodes([1, 2, 3]))


def test_operator_order_zero_is_f_of_zero():
    assert operator(0, OperatorInput.poly([Fraction(5, 2), 7])) == Fraction(5, 2)
    assert operator(0, OperatorInput.nodes([3])) == 3


def test_operator_accepts_plain_coefficients():
    assert operator(3, [0, 1]) == operator(3, T_F)


@pytest.mark.parametrize("n", [2, 3, 10, 57, 100])
def test_operator_limit_finite_form(n):
    got = operator(n, T2_F, X, X, 0) - X ** 2
    assert got == (X - X ** 2) * Fraction(1, n)


# -- moments -------------------------------------------------------------------


def test_moment_extract_examples():
    lhs, rhs = moment_extract(1, 2)
    assert lhs == X1 * (1 + X1 - X2 - LAM)
    assert lhs == rhs
    lhs, rhs = moment_extract(1, 1)
    assert lhs == X1 and rhs == X1
    for n in range(1, 7):
        lhs, rhs = moment_extract(n, n)
        assert lhs == rhs == ff(X1, n)


@pytest.mark.parametrize("n", range(1, 9))
def test_moment_extract_identity(n):
    for i in range(1, n + 1):
        lhs, rhs = moment_extract(i, n)
        assert lhs == rhs


def test_moment_extract_rejects_large_index():
    with pytest.raises(ValueError):
        moment_extract(3, 2)


# -- partial fractions ----------------------------------------------------------


def _lam_scalar(c, power):
    return LinRational(MPoly.const(c), power)


def test_partial_fraction_examples():
    assert partial_fractions(1).coefficients == (LinRational(1),)
    a = partial_fractions(2).coefficients
    assert a == (_lam_scalar(-1, 1), _lam_scalar(1, 1))
    a = partial_fractions(3).coefficients
    assert a == (_lam_scalar(Fraction(1, 2), 2), _lam_scalar(-1, 2), _lam_scalar(Fraction(1, 2), 2))


def test_partial_fraction_l2_spot_value():
    total = partial_fractions(2).as_sum()
    assert total.evaluate({"x": 2, "lambda": 1}) == Fraction(1, 2)
    assert total == LinRational(1, 0, {0: 1, 1: 1})


@pytest.mark.parametrize("l", range(1, 16))
def test_partial_fraction_reconstruction(l):
    pf = partial_fractions(l)
    assert pf.reconstruction() == 1
    assert pf.as_sum() == LinRational(1, 0, {k: 1 for k in range(l)})


@pytest.mark.parametrize("l", range(1, 9))
def test_partial_fraction_residue_form(l):
    # the residue product form lambda^{1-l} prod_{i != k} 1/(k - i) gives the same A_k
    for k, a in enumerate(partial_fractions(l).coefficients):
        prod = Fraction(1)
        for i in range(l):
            if i != k:
                prod /= (k - i)
        assert a == _lam_scalar(prod, l - 1)
        sign = -1 if (k - l - 1) % 2 else 1
        assert a == _lam_scalar(Fraction(sign * comb(l - 1, k), factorial(l - 1)), l - 1)


def test_partial_fractions_rejects_zero():
    with pytest.raises(ValueError):
        partial_fractions(0)
