"""Truncated fermionic sums over Z_p and p-adic convergence checks.

Integrands are univariate polynomials given as ascending coefficient tuples.
A fermionic sum at level N is ``sum_{y=0}^{p^N - 1} f(y) (-1)^y``; it is
computed exactly, by default through closed-form alternating power sums,
with plain term-by-term summation available as an independent route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .core import MPoly, X
from .bernstein import bernstein2
from .degenerate import euler_number, euler_polynomial, falling_factorial

__all__ = [
    "CAP",
    "CapExceeded",
    "PadicContext",
    "PadicDomainError",
    "ValuationReport",
    "ValuationRow",
    "alternating_power_sum",
    "double_integral_check",
    "double_integral_closed_form",
    "double_sum",
    "euler_integral_check",
    "falling_integrand",
    "fermionic_sum",
    "functional_equation_check",
    "is_p_integral",
    "shift_poly",
    "eval_poly",
    "valuation",
]

CAP = 10**7


class PadicDomainError(ValueError):
    pass


class CapExceeded(PadicDomainError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(p) -> int:
    if not isinstance(p, int) or p < 3 or not _is_prime(p):
        raise PadicDomainError(f"p must be an odd prime, got {p!r}")
    return p


def _check_cap(size: int, what: str):
    if size > CAP:
        raise CapExceeded(f"{what} = {size} exceeds the work cap 10^7")


@dataclass(frozen=True)
class PadicContext:
    p: int
    n_max: int

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.n_max < 1:
            raise PadicDomainError("n_max must be >= 1")
        _check_cap(self.p**self.n_max, f"p^N_max = {self.p}^{self.n_max}")

    def levels(self):
        return range(1, self.n_max + 1)


def _nu(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(r, p: int):
    """nu_p(r) for a nonzero rational; +inf for zero."""
    r = Fraction(r)
    if not r:
        return math.inf
    return _nu(abs(r.numerator), p) - _nu(r.denominator, p)


def is_p_integral(r, p: int) -> bool:
    return Fraction(r).denominator % p != 0


# -- univariate helpers ----------------------------------------------------


def eval_poly(coeffs: Sequence, y) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def shift_poly(coeffs: Sequence, s=1) -> tuple:
    """Coefficients of f(y + s)."""
    out = [Fraction(0)] * len(coeffs)
    for m, c in enumerate(coeffs):
        if not c:
            continue
        for j in range(m + 1):
            out[j] += c * comb(m, j) * Fraction(s) ** (m - j)
    return tuple(out)


def _as_coefficients(f) -> tuple:
    if isinstance(f, MPoly):
        used = f.variables()
        if len(used) > 1:
            raise ValueError(f"integrand must be univariate, got variables {used}")
        var = used[0] if used else "x"
        parts = f.collect(var)
        deg = max(parts, default=0)
        return tuple(parts[m].constant_value() if m in parts else Fraction(0) for m in range(deg + 1))
    return tuple(Fraction(c) for c in f)


def falling_integrand(shift, n: int, lambda0, scale: int = 1, sign: int = 1) -> tuple:
    """Coefficients in y of (shift + scale*y)_{n, sign*lambda0}."""
    arg = MPoly.const(Fraction(shift)) + X * scale
    poly = falling_factorial(arg, n, sign).substitute({"lambda": Fraction(lambda0)})
    return _as_coefficients(poly)


# -- alternating sums --------------------------------------------------------


@lru_cache(maxsize=None)
def _classical_euler_numbers(m: int) -> tuple:
    # e_j(0) for the classical Euler polynomials: e_j(1) + e_j(0) = 2 [j == 0]
    eps = []
    for j in range(m + 1):
        s = Fraction(2 if j == 0 else 0)
        for i in range(j):
            s -= comb(j, i) * eps[i]
        eps.append(s / 2)
    return tuple(eps)


def _classical_euler_at(m: int, y: int) -> Fraction:
    eps = _classical_euler_numbers(m)
    return sum((comb(m, j) * eps[j] * y ** (m - j) for j in range(m + 1)), Fraction(0))


def alternating_power_sum(m: int, count: int) -> Fraction:
    """sum_{y=0}^{count-1} (-1)^y y^m in closed form.

    From e_m(y+1) + e_m(y) = 2 y^m the sum telescopes to
    (e_m(0) - (-1)^count e_m(count)) / 2.
    """
    sign = -1 if count % 2 else 1
    return (_classical_euler_at(m, 0) - sign * _classical_euler_at(m, count)) / 2


def _direct_sum(coeffs: tuple, count: int) -> Fraction:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    total = 0
    for y in range(count):
        acc = 0
        for c in reversed(ints):
            acc = acc * y + c
        total += -acc if y & 1 else acc
    return Fraction(total, den)


def fermionic_sum(f, p: int, N: int, method: str = "closed") -> Fraction:
    """S_N[f] = sum_{y=0}^{p^N-1} f(y) (-1)^y, exactly."""
    check_odd_prime(p)
    if N < 0:
        raise PadicDomainError("N must be >= 0")
    count = p**N
    _check_cap(count, f"p^N = {p}^{N}")
    coeffs = _as_coefficients(f)
    if method == "closed":
        return sum(
            (c * alternating_power_sum(m, count) for m, c in enumerate(coeffs) if c),
            Fraction(0),
        )
    if method == "direct":
        return _direct_sum(coeffs, count)
    raise ValueError(f"unknown method {method!r}")


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class ValuationRow:
    N: int
    partial: Fraction
    limit: Fraction
    valuation: object  # int or math.inf


@dataclass
class ValuationReport:
    check: str
    p: int
    params: dict
    rows: list = field(default_factory=list)

    @property
    def valuations(self) -> list:
        return [r.valuation for r in self.rows]

    def deficit(self) -> int:
        """Smallest C with valuation >= N - C at every level (0 if always >= N)."""
        return max([0] + [r.N - r.valuation for r in self.rows if r.valuation != math.inf])

    def meets_bound(self, C: int) -> bool:
        """valuation >= N - C at every level; a fixed C makes the valuations unbounded."""
        return all(r.valuation >= r.N - C for r in self.rows)


def _require_integral(p, **values):
    for name, v in values.items():
        if not is_p_integral(v, p):
            raise PadicDomainError(f"{name} = {v} is not {p}-integral")


def euler_integral_check(n: int, x0, lambda0, ctx: PadicContext, method: str = "closed") -> ValuationReport:
    """Compare S_N[(x0 + y)_{n,lambda0}] against E_{n,lambda0}(x0) for N = 1..N_max."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x0, lambda0 = Fraction(x0), Fraction(lambda0)
    _require_integral(ctx.p, x0=x0, lambda0=lambda0)
    limit = euler_polynomial(n).evaluate({"x": x0, "lambda": lambda0})
    integrand = falling_integrand(x0, n, lambda0)
    report = ValuationReport("euler-integral", ctx.p, {"n": n, "x": x0, "lambda": lambda0})
    for N in ctx.levels():
        s = fermionic_sum(integrand, ctx.p, N, method)
        report.rows.append(ValuationRow(N, s, limit, valuation(s - limit, ctx.p)))
    return report


def functional_equation_check(f, p: int, N: int) -> tuple:
    """(S_N[f(.+1)] + S_N[f], f(0) + f(p^N)); the two agree exactly at every level."""
    coeffs = _as_coefficients(f)
    lhs = fermionic_sum(shift_poly(coeffs, 1), p, N) + fermionic_sum(coeffs, p, N)
    rhs = eval_poly(coeffs, 0) + eval_poly(coeffs, p**N)
    return lhs, rhs


def double_integral_closed_form(k: int, n: int, lambda0=None):
    """Limit of the double fermionic integral of B_{k,n}(x1,x2|lambda).

    With ``lambda0`` None the result is the symbolic polynomial in lambda.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n (got k={k}, n={n})")
    if n == k:
        value = euler_number(n)
    else:
        value = euler_number(k) * (2 * falling_factorial(1, n - k) + euler_number(n - k)) * comb(n, k)
    if lambda0 is None:
        return value
    return value.evaluate({"lambda": Fraction(lambda0)})


def double_sum(poly: MPoly, p: int, N: int, method: str = "closed") -> Fraction:
    """sum over 0 <= x1, x2 < p^N of poly(x1, x2) (-1)^(x1 + x2)."""
    count = p**N
    _check_cap(count * count, f"p^(2N) = {p}^{2 * N}")
    if set(poly.variables()) - {"x1", "x2"}:
        raise ValueError("double_sum integrand may only involve x1 and x2")
    if method == "closed":
        total = Fraction(0)
        for exp, c in poly.items():
            total += c * alternating_power_sum(exp[1], count) * alternating_power_sum(exp[2], count)
        return total
    if method == "direct":
        den = 1
        for _, c in poly.items():
            den = den * c.denominator // math.gcd(den, c.denominator)
        terms = [(exp[1], exp[2], int(c * den)) for exp, c in poly.items()]
        total = 0
        for x1 in range(count):
            for x2 in range(count):
                val = sum(c * x1**a * x2**b for a, b, c in terms)
                total += -val if (x1 + x2) & 1 else val
        return Fraction(total, den)
    raise ValueError(f"unknown method {method!r}")


def double_integral_check(k: int, n: int, lambda0, ctx: PadicContext, method: str = "closed") -> ValuationReport:
    """Truncated double sums of B_{k,n}(x1,x2|lambda0) against the closed-form limit."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n (got k={k}, n={n})")
    lambda0 = Fraction(lambda0)
    _require_integral(ctx.p, lambda0=lambda0)
    _check_cap(ctx.p ** (2 * ctx.n_max), f"p^(2N) = {ctx.p}^{2 * ctx.n_max}")
    integrand = bernstein2(k, n).value.substitute({"lambda": lambda0})
    limit = double_integral_closed_form(k, n, lambda0)
    report = ValuationReport("double-integral", ctx.p, {"k": k, "n": n, "lambda": lambda0})
    for N in ctx.levels():
        s = double_sum(integrand, ctx.p, N, method)
        report.rows.append(ValuationRow(N, s, limit, valuation(s - limit, ctx.p)))
    return report
