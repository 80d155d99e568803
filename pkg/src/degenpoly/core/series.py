"""Truncated exponential generating functions with polynomial coefficients.

Coefficient ``m`` of a series is the polynomial multiplying ``t**m / m!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .mpoly import MPoly


@dataclass(frozen=True)
class TruncSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        coeffs = tuple(MPoly.coerce(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int | None = None) -> "TruncSeries":
        """Build from leading coefficients, padding with zeros or truncating to ``order``."""
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1] + [MPoly()] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def unit(cls, order: int) -> "TruncSeries":
        return cls.from_coeffs([MPoly.const(1)], order)

    @classmethod
    def monomial(cls, k: int, c, order: int) -> "TruncSeries":
        """The series c * t**k / k! (zero if k exceeds the order)."""
        if k > order:
            return cls.from_coeffs([], order)
        return cls.from_coeffs([MPoly()] * k + [MPoly.coerce(c)], order)

    def __getitem__(self, m: int) -> MPoly:
        return self.coeffs[m]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(self.order, tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncSeries":
        result = TruncSeries.unit(self.order)
        for _ in range(k):
            result = series_mul(result, self)
        return result

    def substitute(self, bindings) -> "TruncSeries":
        return TruncSeries(self.order, tuple(c.substitute(bindings) for c in self.coeffs))

    def ordinary(self, m: int) -> MPoly:
        """Coefficient of t**m itself, i.e. coeffs[m] / m!."""
        return self.coeffs[m] * Fraction(1, factorial(m))


def _check_orders(a, b):
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Binomial (exponential) Cauchy product, truncated at the shared order."""
    _check_orders(a, b)
    out = []
    for m in range(a.order + 1):
        acc = MPoly()
        for j in range(m + 1):
            if a.coeffs[j] and b.coeffs[m - j]:
                acc = acc + a.coeffs[j] * b.coeffs[m - j] * comb(m, j)
        out.append(acc)
    return TruncSeries(a.order, tuple(out))
