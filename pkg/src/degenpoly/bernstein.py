"""Degenerate Bernstein polynomials, the degenerate Bernstein operator, and the
partial-fraction expansion of 1/(x)_{l,lambda}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .core import LAM, MPoly, LinRational, TruncSeries, X, X1, X2, rf_combine, series_mul
from .degenerate import degenerate_exp, falling_factorial

__all__ = [
    "BernsteinPoly",
    "OperatorInput",
    "PartialFraction",
    "bernstein",
    "bernstein2",
    "bernstein_genfun_check",
    "bernstein_series",
    "moment_extract",
    "operator",
    "partial_fractions",
]


@dataclass(frozen=True)
class BernsteinPoly:
    k: int
    n: int
    two_var: bool
    value: MPoly


def _check_indices(k, n):
    if k < 0 or n < 0:
        raise ValueError(f"Bernstein indices must be >= 0 (got k={k}, n={n})")


def bernstein(k: int, n: int) -> BernsteinPoly:
    """B_{k,n}(x|lambda) = C(n,k) (x)_{k,lambda} (1-x)_{n-k,lambda}; zero when n < k."""
    _check_indices(k, n)
    if n < k:
        return BernsteinPoly(k, n, False, MPoly())
    value = falling_factorial(X, k) * falling_factorial(1 - X, n - k) * comb(n, k)
    return BernsteinPoly(k, n, False, value)


def bernstein2(k: int, n: int) -> BernsteinPoly:
    """B_{k,n}(x1,x2|lambda) = C(n,k) (x1)_{k,lambda} (1-x2)_{n-k,lambda}; zero when n < k."""
    _check_indices(k, n)
    if n < k:
        return BernsteinPoly(k, n, True, MPoly())
    value = falling_factorial(X1, k) * falling_factorial(1 - X2, n - k) * comb(n, k)
    return BernsteinPoly(k, n, True, value)


def bernstein_series(k: int, order: int) -> TruncSeries:
    """(x1)_{k,lambda}/k! t^k e_lambda^{1-x2}(t), truncated at ``order``."""
    # t^k/k! has exponential coefficient 1 at index k
    head = TruncSeries.monomial(k, falling_factorial(X1, k), order)
    return series_mul(head, degenerate_exp(1 - X2, order))


def bernstein_genfun_check(k: int, order: int) -> bool:
    """True iff the generating function reproduces bernstein2(k, n) for every n <= order."""
    series = bernstein_series(k, order)
    return all(series[n] == bernstein2(k, n).value for n in range(order + 1))


@dataclass(frozen=True)
class OperatorInput:
    """Operator argument f: either a polynomial in t or a table of values f(k/n)."""

    kind: str
    data: tuple

    @classmethod
    def poly(cls, coeffs: Sequence) -> "OperatorInput":
        """Coefficients in increasing powers of t."""
        return cls("poly_in_t", tuple(Fraction(c) for c in coeffs))

    @classmethod
    def nodes(cls, values: Sequence) -> "OperatorInput":
        return cls("node_values", tuple(Fraction(v) for v in values))

    def at(self, k: int, n: int) -> Fraction:
        if self.kind == "node_values":
            if len(self.data) != n + 1:
                raise ValueError(f"node_values needs {n + 1} entries for order {n}, got {len(self.data)}")
            return self.data[k]
        if n == 0:
            return self.data[0] if self.data else Fraction(0)
        t = Fraction(k, n)
        acc = Fraction(0)
        for c in reversed(self.data):
            acc = acc * t + c
        return acc

    def node_table(self, n: int) -> "OperatorInput":
        return OperatorInput.nodes([self.at(k, n) for k in range(n + 1)])


def _falling_table(arg: MPoly, m: int, lam) -> list:
    """[(arg)_{0}, ..., (arg)_{m}] with step ``lam`` (symbolic lambda when None)."""
    if lam is None:
        return [falling_factorial(arg, j) for j in range(m + 1)]
    out = [MPoly.const(1)]
    for j in range(m):
        out.append(out[-1] * (arg - j * lam))
    return out


def operator(n: int, f: OperatorInput, x1_arg=None, x2_arg=None, lambda_arg=None) -> MPoly:
    """sum_k f(k/n) B_{k,n}(x1, x2|lambda), optionally with x1, x2, lambda specialized.

    Specializations are applied factor by factor, which keeps large orders cheap
    when lambda is fixed.
    """
    if n < 0:
        raise ValueError("operator order must be >= 0")
    if not isinstance(f, OperatorInput):
        f = OperatorInput.poly(f)
    x1 = X1 if x1_arg is None else MPoly.coerce(x1_arg)
    x2 = X2 if x2_arg is None else MPoly.coerce(x2_arg)
    lam = None if lambda_arg is None else MPoly.coerce(lambda_arg)
    if lam is not None and lam.degree("lambda") > 0:
        raise ValueError("lambda_arg must not involve lambda")
    heads = _falling_table(x1, n, lam)
    tails = _falling_table(1 - x2, n, lam)
    total = MPoly()
    for k in range(n + 1):
        w = f.at(k, n)
        if w:
            total = total + heads[k] * tails[n - k] * (w * comb(n, k))
    if lam is not None:
        # lambda inside x1_arg / x2_arg gets specialized too
        total = total.substitute({"lambda": lam})
    return total


def moment_extract(i: int, n: int) -> tuple:
    """Both sides of (x1)_{i,lambda} (1+x1-x2-i lambda)_{n-i,lambda} = sum_{k>=i} C(k,i)/C(n,i) B_{k,n}."""
    if i < 1:
        raise ValueError("moment index i must be >= 1")
    if i > n:
        raise ValueError(f"moment index i={i} exceeds order n={n}")
    lhs = falling_factorial(X1, i) * falling_factorial(1 + X1 - X2 - i * LAM, n - i)
    rhs = MPoly()
    for k in range(i, n + 1):
        rhs = rhs + bernstein2(k, n).value * Fraction(comb(k, i), comb(n, i))
    return lhs, rhs


@dataclass(frozen=True)
class PartialFraction:
    l: int
    coefficients: tuple  # A_0..A_{l-1}, each a LinRational in lambda alone

    def as_sum(self) -> LinRational:
        """sum_k A_k / (x - k lambda)."""
        return rf_combine(
            [a * LinRational(1, 0, {k: 1}) for k, a in enumerate(self.coefficients)],
        )

    def reconstruction(self) -> LinRational:
        """sum_k A_k prod_{i != k} (x - i lambda); identically 1 when the expansion is right."""
        terms = []
        for k, a in enumerate(self.coefficients):
            prod = MPoly.const(1)
            for i in range(self.l):
                if i != k:
                    prod = prod * (X - i * LAM)
            terms.append(a * prod)
        return rf_combine(terms)


def partial_fractions(l: int) -> PartialFraction:
    """A_k = (-lambda)^{1-l}/(l-1)! C(l-1,k) (-1)^k for 1/(x)_{l,lambda} = sum A_k/(x - k lambda)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    sign_l = -1 if (l - 1) % 2 else 1  # (-1)^{1-l}
    coeffs = []
    for k in range(l):
        c = Fraction(sign_l * (-1) ** k * comb(l - 1, k), factorial(l - 1))
        coeffs.append(LinRational(MPoly.const(c), l - 1))
    return PartialFraction(l, tuple(coeffs))
