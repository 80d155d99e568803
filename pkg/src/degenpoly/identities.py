"""Registry of the degenerate Euler/Bernstein identities, checked by exact zero residuals.

Every case builds two or more *sides* (``MPoly`` or ``LinRational``) that must
all be equal; a case passes when each difference reduces to the zero element.
Integral statements are registered in symbolic form: a fermionic integral of a
polynomial is evaluated by expanding in the falling-factorial basis and sending
``(y)_{m,lambda}`` to ``E_{m,lambda}``.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from .bernstein import OperatorInput, bernstein, bernstein2, moment_extract, operator, partial_fractions
from .core import LAM, ONE, X, X1, X2, LinRational, MPoly, rf_combine
from .degenerate import (
    euler_number,
    euler_polynomial,
    falling_factorial,
    fermionic_integral,
    higher_order_euler,
    negate_lambda,
)
from .padic import double_integral_closed_form

__all__ = [
    "DomainError",
    "IdentityCase",
    "UnknownIdentity",
    "VerificationReport",
    "lookup",
    "perturbed",
    "registry",
    "sides_equal",
    "thm24_cleared_sides",
    "verify",
    "verify_all",
]


class UnknownIdentity(LookupError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityCase:
    id: str
    statement: str
    params: tuple
    grid: Callable[[int, int], list]
    builder: Callable[..., tuple]
    domain: Callable[..., bool]
    domain_note: str
    excluded_specializations: tuple = ()

    def build(self, **params) -> tuple:
        return self.builder(**params)


@dataclass
class VerificationReport:
    id: str
    params: dict
    verdict: str  # "pass", "fail" or "skip"
    residual: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def params_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params.items())


# -- side comparison ------------------------------------------------------------


def _difference(a, b):
    if isinstance(a, LinRational) or isinstance(b, LinRational):
        return rf_combine([a, b], [1, -1])
    return MPoly.coerce(a) - MPoly.coerce(b)


def sides_equal(sides: Sequence):
    """(True, None) if every side equals the first, else (False, residual text)."""
    if len(sides) < 2:
        raise ValueError("an identity needs at least two sides")
    for j in range(1, len(sides)):
        diff = _difference(sides[0], sides[j])
        if not diff.is_zero():
            return False, f"side0 - side{j} = {diff}"
    return True, None


# -- grids ------------------------------------------------------------------------


def _over(name: str, lo: int, bound: str):
    def grid(n_max, k_max):
        top = n_max if bound == "n" else k_max
        return [{name: v} for v in range(lo, top + 1)]

    return grid


def _kn_grid(k_lo: int, n_lo: int):
    def grid(n_max, k_max):
        return [
            {"k": k, "n": n}
            for n in range(n_lo, n_max + 1)
            for k in range(k_lo, min(n, k_max) + 1)
        ]

    return grid


def _ni_grid(n_max, k_max):
    return [{"n": n, "i": i} for n in range(1, n_max + 1) for i in range(1, min(n, k_max) + 1)]


def _nk_rect(n_max, k_max):
    return [{"n": n, "k": k} for n in range(1, n_max + 1) for k in range(1, k_max + 1)]


# -- builders -----------------------------------------------------------------------


def _sgn(m: int) -> int:
    return -1 if m % 2 else 1


def _eq14(n):
    return euler_polynomial(n, 1) + euler_number(n), MPoly.const(2 if n == 0 else 0)


def _eq15(n):
    return euler_polynomial(n, 1 - X), euler_polynomial(n, X, sign=-1) * _sgn(n)


def _eq17(n):
    return falling_factorial(1 - X, n), falling_factorial(X - 1, n, sign=-1) * _sgn(n)


def _thm21(n):
    return euler_polynomial(n, 2), 2 * falling_factorial(1, n) + euler_number(n)


def _thm22(n):
    return (
        fermionic_integral(falling_factorial(1 - X, n), "x"),
        fermionic_integral(falling_factorial(X + 2, n), "x"),
        2 * falling_factorial(1, n) + fermionic_integral(falling_factorial(X, n), "x"),
    )


def _cor23(n):
    return (
        euler_polynomial(n, -1, sign=-1) * _sgn(n),
        2 * falling_factorial(1, n) + euler_number(n),
        euler_polynomial(n, 2),
    )


def _thm24(n):
    terms = [LinRational(falling_factorial(1 - X, n))]
    for l in range(1, n + 1):
        weight = bernstein(l, n).value * euler_number(l)
        terms.append(partial_fractions(l).as_sum() * weight)
    return LinRational(euler_polynomial(n, 1 - X)), rf_combine(terms)


def thm24_cleared_sides(n: int) -> tuple:
    """Both sides of the Bernstein expansion of E_n(1-x) after multiplying through by
    lambda^(n-1) (x)_{n,lambda}, built as plain polynomials with no rational-function arithmetic."""
    lam_shift = max(n - 1, 0)
    scale = LAM ** lam_shift * falling_factorial(X, n)
    lhs = euler_polynomial(n, 1 - X) * scale
    rhs = falling_factorial(1 - X, n) * scale
    for l in range(1, n + 1):
        weight = bernstein(l, n).value * euler_number(l)
        for k in range(l):
            # A_k * lambda^(l-1), a pure rational
            c = Fraction(_sgn(l - 1) * _sgn(k) * comb(l - 1, k), factorial(l - 1))
            others = ONE
            for i in range(n):
                if i != k:
                    others = others * (X - i * LAM)
            rhs = rhs + weight * others * LAM ** (n - l) * c
    return lhs, rhs


def _cor25(n):
    terms = [LinRational(falling_factorial(2, n))]
    for l in range(1, n + 1):
        weight = bernstein(l, n).value.substitute({"x": -1}) * euler_number(l)
        prefactor = LinRational(MPoly.const(Fraction(_sgn(l - 1), factorial(l - 1))), l - 1)
        inner = rf_combine(
            # 1/(1 + k lambda) = -1/(-1 - k lambda)
            [LinRational(-1, 0, {(-1, k): 1}) for k in range(l)],
            [_sgn(k) * comb(l - 1, k) for k in range(l)],
        )
        terms.append(prefactor * inner * weight)
    return LinRational(euler_polynomial(n, 2)), rf_combine(terms, [1] + [-1] * n)


def _thm26(n, k):
    lhs = bernstein(k, n + k).value * Fraction(2**k, comb(n + k, n))
    acc = MPoly()
    for l in range(k + 1):
        acc = acc + higher_order_euler(k, n, 1 - X + l) * comb(k, l)
    return lhs, falling_factorial(X, k) * acc


def _sym31(k, n):
    mirrored = bernstein2(n - k, n).value.substitute({"x1": 1 - X2, "x2": 1 - X1})
    return bernstein2(k, n).value, mirrored


def _thm27(k, n):
    lhs = (1 - X2 - (n - k - 1) * LAM) * bernstein2(k, n - 1).value \
        + (X1 - (k - 1) * LAM) * bernstein2(k - 1, n - 1).value
    return lhs, bernstein2(k, n).value


def _eq34(n):
    total = MPoly()
    for k in range(n + 1):
        total = total + bernstein2(k, n).value
    return total, falling_factorial(1 + X1 - X2, n)


def _eq35(n):
    return (
        operator(n, OperatorInput.poly([0, 1])),
        falling_factorial(X1, 1) * falling_factorial(X1 + 1 - LAM - X2, n - 1),
    )


def _eq37(n):
    closed = falling_factorial(X1, 1) * falling_factorial(1 + X1 - LAM - X2, n - 1) * Fraction(1, n) \
        + falling_factorial(X1, 2) * falling_factorial(1 + X1 - 2 * LAM - X2, n - 2) * Fraction(n - 1, n)
    return operator(n, OperatorInput.poly([0, 0, 1])), closed


def _thm28(n, i):
    return moment_extract(i, n)


def _thm29(k, n):
    double = fermionic_integral(fermionic_integral(bernstein2(k, n).value, "x1"), "x2")
    factored = fermionic_integral(falling_factorial(X1, k), "x1") \
        * fermionic_integral(falling_factorial(1 - X2, n - k), "x2") * comb(n, k)
    return double, factored, double_integral_closed_form(k, n)


def _thm210(k):
    acc = falling_factorial(1, k)
    for l in range(k):
        tail = negate_lambda(euler_number(k - l)) + 2 * falling_factorial(1, k - l, sign=-1)
        acc = acc + falling_factorial(1, l) * tail * (comb(k, l) * _sgn(k + l))
    return euler_number(k), acc


def _cor211(k):
    acc = -falling_factorial(1, k)
    for l in range(k):
        acc = acc + falling_factorial(1, l) * negate_lambda(euler_number(k - l)) * (comb(k, l) * _sgn(k + l))
    return euler_number(k), acc


def _aux_sum(k):
    first = MPoly()
    for l in range(k):
        first = first + falling_factorial(1, l) * falling_factorial(1, k - l, sign=-1) * (comb(k, l) * _sgn(k + l))
    full = MPoly()
    for l in range(k + 1):
        full = full + falling_factorial(-1, l, sign=-1) * falling_factorial(1, k - l, sign=-1) * comb(k, l)
    second = (full - falling_factorial(-1, k, sign=-1)) * _sgn(k)
    third = (falling_factorial(0, k, sign=-1) - falling_factorial(-1, k, sign=-1)) * _sgn(k)
    return first, second, third, -falling_factorial(1, k)


def _always(**_):
    return True


def _n_pos(n, **_):
    return n >= 1


def _k_pos(k, **_):
    return k >= 1


_CASES = (
    IdentityCase("eq14", "E_n(1) + E_n = 2 delta_{0,n}", ("n",), _over("n", 0, "n"), _eq14,
                 _always, "n >= 0"),
    IdentityCase("eq15", "E_{n,lambda}(1-x) = (-1)^n E_{n,-lambda}(x)", ("n",), _over("n", 0, "n"), _eq15,
                 _always, "n >= 0"),
    IdentityCase("eq17", "(1-x)_{n,lambda} = (-1)^n (x-1)_{n,-lambda}", ("n",), _over("n", 0, "n"), _eq17,
                 _always, "n >= 0"),
    IdentityCase("thm2.1", "E_{n,lambda}(2) = 2(1)_{n,lambda} + E_{n,lambda}", ("n",), _over("n", 1, "n"), _thm21,
                 _n_pos, "n >= 1 (fails at n = 0: 1 != 3)"),
    IdentityCase("thm2.2-symbolic",
                 "int (1-x)_{n,lambda} = int (x+2)_{n,lambda} = 2(1)_{n,lambda} + int (x)_{n,lambda}",
                 ("n",), _over("n", 1, "n"), _thm22, _n_pos, "n >= 1"),
    IdentityCase("cor2.3", "(-1)^n E_{n,-lambda}(-1) = 2(1)_{n,lambda} + E_{n,lambda} = E_{n,lambda}(2)",
                 ("n",), _over("n", 1, "n"), _cor23, _n_pos, "n >= 1"),
    IdentityCase("thm2.4",
                 "E_{n,lambda}(1-x) = (1-x)_{n,lambda} + sum_l B_{l,n}(x|lambda) E_{l,lambda} sum_k A_k/(x - k lambda)",
                 ("n",), _over("n", 0, "n"), _thm24, _always,
                 "n >= 0 (n = 0 is vacuous); x must avoid the poles x = k lambda",
                 excluded_specializations=("x = k*lambda for 0 <= k < n",)),
    IdentityCase("cor2.5",
                 "E_{n,lambda}(2) = (2)_{n,lambda} - sum_l B_{l,n}(-1|lambda) E_{l,lambda} sum_k A_k'/(1 + k lambda)",
                 ("n",), _over("n", 0, "n"), _cor25, _always,
                 "n >= 0; lambda must avoid -1/k for 1 <= k < n",
                 excluded_specializations=("lambda = -1/k for 1 <= k < n",)),
    IdentityCase("thm2.6",
                 "2^k/C(n+k,n) B_{k,n+k}(x|lambda) = (x)_{k,lambda} sum_l C(k,l) E^{(k)}_{n,lambda}(1-x+l)",
                 ("n", "k"), _nk_rect, _thm26, lambda n, k: n >= 1 and k >= 1, "n, k >= 1"),
    IdentityCase("sym-eq31", "B_{k,n}(x1,x2|lambda) = B_{n-k,n}(1-x2,1-x1|lambda)", ("k", "n"), _kn_grid(0, 0),
                 _sym31, lambda k, n: 0 <= k <= n, "0 <= k <= n"),
    IdentityCase("thm2.7",
                 "(1-x2-(n-k-1)lambda) B_{k,n-1} + (x1-(k-1)lambda) B_{k-1,n-1} = B_{k,n}",
                 ("k", "n"), _kn_grid(1, 1), _thm27, lambda k, n: 1 <= k <= n, "1 <= k <= n"),
    IdentityCase("eq34", "sum_k B_{k,n}(x1,x2|lambda) = (1+x1-x2)_{n,lambda}", ("n",), _over("n", 0, "n"), _eq34,
                 _always, "n >= 0"),
    IdentityCase("eq35", "B_n(t|x1,x2) = (x1)_{1,lambda} (x1+1-lambda-x2)_{n-1,lambda}", ("n",),
                 _over("n", 1, "n"), _eq35, _n_pos, "n >= 1"),
    IdentityCase("eq37",
                 "B_n(t^2|x1,x2) = (1/n)(x1)_1 (1+x1-lambda-x2)_{n-1} + ((n-1)/n)(x1)_2 (1+x1-2lambda-x2)_{n-2}",
                 ("n",), _over("n", 2, "n"), _eq37, lambda n: n >= 2, "n >= 2"),
    IdentityCase("thm2.8",
                 "(x1)_{i,lambda} (1+x1-x2-i lambda)_{n-i,lambda} = sum_{k>=i} C(k,i)/C(n,i) B_{k,n}(x1,x2|lambda)",
                 ("n", "i"), _ni_grid, _thm28, lambda n, i: 1 <= i <= n, "1 <= i <= n"),
    IdentityCase("thm2.9-symbolic",
                 "int int B_{k,n}(x1,x2|lambda) = C(n,k) E_k (2(1)_{n-k} + E_{n-k}) (n > k), E_n (n = k)",
                 ("k", "n"), _kn_grid(0, 0), _thm29, lambda k, n: 0 <= k <= n, "0 <= k <= n"),
    IdentityCase("thm2.10",
                 "E_k = (1)_k + sum_{l<k} C(k,l)(-1)^{k+l}(1)_l (E_{k-l,-lambda} + 2(1)_{k-l,-lambda})",
                 ("k",), _over("k", 1, "k"), _thm210, _k_pos, "k >= 1"),
    IdentityCase("cor2.11", "E_k = -(1)_k + sum_{l<k} C(k,l)(-1)^{k+l}(1)_l E_{k-l,-lambda}", ("k",),
                 _over("k", 1, "k"), _cor211, _k_pos, "k >= 1"),
    IdentityCase("aux-sum", "sum_{l<k} C(k,l)(-1)^{k+l}(1)_{l,lambda}(1)_{k-l,-lambda} = -(1)_{k,lambda}", ("k",),
                 _over("k", 1, "k"), _aux_sum, _k_pos, "k >= 1"),
)


def registry() -> list:
    return list(_CASES)


def lookup(case_id: str, cases: Iterable | None = None) -> IdentityCase:
    for case in (cases if cases is not None else _CASES):
        if case.id == case_id:
            return case
    raise UnknownIdentity(f"unknown identity id {case_id!r}")


def _check_params(case: IdentityCase, params: dict):
    if set(params) != set(case.params):
        raise DomainError(f"{case.id} takes parameters {case.params}, got {tuple(params)}")
    for name, v in params.items():
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{case.id}: parameter {name} must be a non-negative int, got {v!r}")
    if not case.domain(**params):
        raise DomainError(f"{case.id}: parameters {params} outside validity domain ({case.domain_note})")


def _run(case: IdentityCase, params: dict) -> VerificationReport:
    start = time.perf_counter()
    ok, residual = sides_equal(case.build(**params))
    elapsed = time.perf_counter() - start
    ordered = {name: params[name] for name in case.params}
    return VerificationReport(case.id, ordered, "pass" if ok else "fail", residual, elapsed)


def verify(case_id: str, cases: Iterable | None = None, **params) -> VerificationReport:
    case = lookup(case_id, cases)
    _check_params(case, params)
    return _run(case, params)


def _default_workers() -> int:
    raw = os.environ.get("DEGENPOLY_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_all(n_max: int, k_max: int | None = None, ids: Iterable | None = None,
               cases: Iterable | None = None, workers: int | None = None) -> list:
    """Run every selected case over its grid; reports come back in registry/grid order."""
    if k_max is None:
        k_max = n_max
    if n_max < 1 or k_max < 1:
        raise DomainError("n_max and k_max must be >= 1")
    pool = list(cases) if cases is not None else list(_CASES)
    if ids is not None:
        pool = [lookup(i, pool) for i in ids]
    jobs = []
    slots = []
    for case in pool:
        grid = [p for p in case.grid(n_max, k_max) if case.domain(**p)]
        if not grid:
            slots.append(VerificationReport(case.id, {}, "skip"))
            continue
        for params in grid:
            slots.append(None)
            jobs.append((len(slots) - 1, case, params))
    workers = workers or _default_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            done = list(ex.map(lambda job: _run(job[1], job[2]), jobs))
    else:
        done = [_run(case, params) for _, case, params in jobs]
    for (slot, _, _), report in zip(jobs, done):
        slots[slot] = report
    return slots


# -- mutation testing -------------------------------------------------------------------


def _flip_leading(side):
    if isinstance(side, LinRational):
        if side.is_zero():
            return None
        return LinRational(_flip_leading(side.numer), side.lambda_power, dict(side.factors))
    side = MPoly.coerce(side)
    if side.is_zero():
        return None
    exp, c = side.leading_term()
    return side - MPoly({exp: 2 * c})


def perturbed(case: IdentityCase) -> IdentityCase:
    """Copy of ``case`` whose builder flips the sign of one coefficient in the first nonzero side."""
    inner = case.builder

    def builder(**params):
        sides = list(inner(**params))
        for j, side in enumerate(sides):
            flipped = _flip_leading(side)
            if flipped is not None:
                sides[j] = flipped
                break
        return tuple(sides)

    return replace(case, builder=builder)
