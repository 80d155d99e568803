"""Lambda-falling factorials and degenerate Euler numbers/polynomials (ordinary and higher order).

Everything is returned as an exact :class:`MPoly`; lambda stays a symbol, so
``E_{n,-lambda}`` is obtained with ``sign=-1`` rather than by plugging in a number.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .core import LAM, MPoly, TruncSeries, series_mul

__all__ = [
    "degenerate_exp",
    "euler_number",
    "euler_number_series",
    "euler_polynomial",
    "euler_series",
    "falling_basis",
    "fermionic_integral",
    "falling_factorial",
    "higher_order_euler",
    "higher_order_euler_number",
    "negate_lambda",
]


def negate_lambda(p: MPoly) -> MPoly:
    return p.substitute({"lambda": -LAM})


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


@lru_cache(maxsize=None)
def _falling(arg: MPoly, n: int, sign: int) -> MPoly:
    if n == 0:
        return MPoly.const(1)
    return _falling(arg, n - 1, sign) * (arg - (sign * (n - 1)) * LAM)


def falling_factorial(arg="x", n: int = 0, sign: int = 1) -> MPoly:
    """(arg)_{n, sign*lambda} = arg (arg - sign*lambda) ... (arg - (n-1) sign*lambda)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_sign(sign)
    return _falling(MPoly.coerce(arg), n, sign)


# Plain dict caches: concurrent fills only ever insert identical values.
_EULER_NUMBERS: dict = {}
_HIGHER_NUMBERS: dict = {}


def euler_number(n: int) -> MPoly:
    """Degenerate Euler number E_{n,lambda} as a polynomial in lambda.

    Uses 2 E_n = 2 [n == 0] - sum_{l<n} C(n,l) E_l (1)_{n-l,lambda}, which
    follows from E_n(1) + E_n = 2 delta_{0,n} and the Appell-type expansion.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cached = _EULER_NUMBERS.get(n)
    if cached is not None:
        return cached
    for m in range(n + 1):
        if m in _EULER_NUMBERS:
            continue
        acc = MPoly.const(2 if m == 0 else 0)
        for l in range(m):
            acc = acc - _EULER_NUMBERS[l] * falling_factorial(1, m - l) * comb(m, l)
        _EULER_NUMBERS[m] = acc / 2
    return _EULER_NUMBERS[n]


def euler_polynomial(n: int, x_arg="x", sign: int = 1) -> MPoly:
    """E_{n, sign*lambda}(x_arg) = sum_l C(n,l) E_{l, sign*lambda} (x_arg)_{n-l, sign*lambda}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_sign(sign)
    arg = MPoly.coerce(x_arg)
    total = MPoly()
    for l in range(n + 1):
        e = euler_number(l)
        if sign < 0:
            e = negate_lambda(e)
        total = total + e * falling_factorial(arg, n - l, sign) * comb(n, l)
    return total


def higher_order_euler_number(k: int, n: int) -> MPoly:
    """E^{(k)}_{n,lambda}: n-th coefficient of the k-th power of the Euler number series."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    if k == 0:
        return MPoly.const(1 if n == 0 else 0)
    if k == 1:
        return euler_number(n)
    key = (k, n)
    cached = _HIGHER_NUMBERS.get(key)
    if cached is not None:
        return cached
    acc = MPoly()
    for j in range(n + 1):
        acc = acc + higher_order_euler_number(k - 1, j) * euler_number(n - j) * comb(n, j)
    _HIGHER_NUMBERS[key] = acc
    return acc


def higher_order_euler(k: int, n: int, x_arg="x") -> MPoly:
    if k < 1:
        raise ValueError("order k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    arg = MPoly.coerce(x_arg)
    total = MPoly()
    for j in range(n + 1):
        total = total + higher_order_euler_number(k, j) * falling_factorial(arg, n - j) * comb(n, j)
    return total


def degenerate_exp(x_arg, order: int) -> TruncSeries:
    """Truncation of (1 + lambda t)^(x_arg/lambda): coefficients (x_arg)_{m,lambda}."""
    if order < 0:
        raise ValueError("order must be >= 0")
    arg = MPoly.coerce(x_arg)
    return TruncSeries(order, tuple(falling_factorial(arg, m) for m in range(order + 1)))


def euler_number_series(order: int) -> TruncSeries:
    """Truncation of 2 / ((1 + lambda t)^(1/lambda) + 1)."""
    return TruncSeries(order, tuple(euler_number(m) for m in range(order + 1)))


def euler_series(order: int, k: int = 1, x_arg="x") -> TruncSeries:
    """Generating-function route: k-fold product of Euler number series times e_lambda^x."""
    if k < 1:
        raise ValueError("order k must be >= 1")
    base = euler_number_series(order)
    acc = base
    for _ in range(k - 1):
        acc = series_mul(acc, base)
    return series_mul(acc, degenerate_exp(x_arg, order))


def falling_basis(p: MPoly, var="x") -> dict:
    """Coefficients d_m (free of ``var``) with p = sum_m d_m (var)_{m,lambda}."""
    v = MPoly.var(var)
    out: dict = {}
    rest = p
    while rest:
        parts = rest.collect(var)
        d = max(parts)
        lead = parts[d]
        out[d] = lead
        rest = rest - lead * falling_factorial(v, d)
    return out


def fermionic_integral(p: MPoly, var="x") -> MPoly:
    """Symbolic fermionic integral over ``var``: each (var)_{m,lambda} integrates to E_{m,lambda}."""
    total = MPoly()
    for m, c in falling_basis(p, var).items():
        total = total + c * euler_number(m)
    return total
