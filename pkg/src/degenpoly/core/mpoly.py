"""Sparse multivariate polynomials over the rationals in the fixed variables x, x1, x2, lambda."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

VARS = ("x", "x1", "x2", "lambda")
NVARS = len(VARS)

_ALIASES = {
    "x": 0,
    "x1": 1,
    "x2": 2,
    "lambda": 3,
    "lam": 3,
    "λ": 3,
}

Scalar = Union[int, Fraction]
Exponent = tuple  # length-4 tuple of non-negative ints


def var_index(name) -> int:
    """Resolve a variable name (or index) to its slot in the exponent vector."""
    if isinstance(name, int):
        if not 0 <= name < NVARS:
            raise ValueError(f"variable index out of range: {name}")
        return name
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _canonical_key(item):
    exp = item[0]
    return (-sum(exp), tuple(-e for e in exp))


_ZERO_EXP = (0,) * NVARS


class MPoly:
    """Immutable sparse polynomial; terms map exponent 4-tuples to nonzero Fractions.

    Equal polynomials have identical term maps, and ``terms()`` lists them in
    graded lexicographic order (highest total degree first, ties broken by
    the variable order x, x1, x2, lambda).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp!r}")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        # terms already normalized: Fraction coefficients, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        c = Fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name) -> "MPoly":
        exp = [0] * NVARS
        exp[var_index(name)] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "MPoly":
        """Lift ints, Fractions and variable names to MPoly."""
        if isinstance(value, MPoly):
            return value
        if isinstance(value, str):
            return cls.var(value)
        if isinstance(value, Rational):
            return cls.const(value)
        raise TypeError(f"cannot convert {type(value).__name__} to MPoly")

    # -- inspection --------------------------------------------------------

    def terms(self) -> list:
        return sorted(self._terms.items(), key=_canonical_key)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def coeff(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def degree(self, var=None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = var_index(var)
        return max(e[i] for e in self._terms)

    def variables(self) -> tuple:
        used = set()
        for exp in self._terms:
            used.update(i for i, e in enumerate(exp) if e)
        return tuple(VARS[i] for i in sorted(used))

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms()[0]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, MPoly):
            c = Fraction(other)
            if not c:
                return MPoly._raw({})
            return MPoly._raw({e: v * c for e, v in self._terms.items()})
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            b0, b1, b2, b3 = eb
            for ea, ca in a.items():
                e = (ea[0] + b0, ea[1] + b1, ea[2] + b2, ea[3] + b3)
                out[e] = get(e, 0) + ca * cb
        return MPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("MPoly exponent must be a non-negative int")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == MPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution and evaluation --------------------------------------

    def substitute(self, bindings: Mapping) -> "MPoly":
        """Simultaneous substitution; unbound variables pass through."""
        subs = {}
        for name, value in bindings.items():
            subs[var_index(name)] = MPoly.coerce(value)
        if not subs:
            return self
        powers = {i: [MPoly.const(1)] for i in subs}

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * subs[i])
            return cache[k]

        out = MPoly._raw({})
        grouped: dict = {}
        for exp, c in self._terms.items():
            kept = tuple(0 if i in subs else e for i, e in enumerate(exp))
            key = tuple(exp[i] for i in sorted(subs))
            grouped.setdefault(key, {})[kept] = c
        order = sorted(subs)
        for key, rest in grouped.items():
            factor = MPoly._raw(rest)
            for i, k in zip(order, key):
                if k:
                    factor = factor * power(i, k)
            out = out + factor
        return out

    def evaluate(self, bindings: Mapping) -> Fraction:
        """Evaluate at rational values; every variable present must be bound."""
        values = [None] * NVARS
        for name, value in bindings.items():
            values[var_index(name)] = Fraction(value)
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    if values[i] is None:
                        raise ValueError(f"variable {VARS[i]} is unbound")
                    term *= values[i] ** e
            total += term
        return total

    def collect(self, var) -> dict:
        """Split into {power: coefficient MPoly free of ``var``}."""
        i = var_index(var)
        parts: dict = {}
        for exp, c in self._terms.items():
            k = exp[i]
            rest = exp[:i] + (0,) + exp[i + 1:]
            parts.setdefault(k, {})[rest] = c
        return {k: MPoly._raw(v) for k, v in parts.items()}

    def divide_linear(self, var, root) -> tuple:
        """Synthetic division by (var - root); ``root`` must not involve ``var``.

        Returns (quotient, remainder) with self = (var - root) * quotient + remainder.
        """
        i = var_index(var)
        root = MPoly.coerce(root)
        if root.degree(var) > 0:
            raise ValueError("root must not depend on the division variable")
        parts = self.collect(var)
        if not parts:
            return MPoly._raw({}), MPoly._raw({})
        d = max(parts)
        shift = [0] * NVARS
        quotient = MPoly._raw({})
        carry = MPoly._raw({})
        for k in range(d, 0, -1):
            carry = parts.get(k, MPoly._raw({})) + root * carry
            shift[i] = k - 1
            quotient = quotient + carry * MPoly._raw({tuple(shift): Fraction(1)})
        remainder = parts.get(0, MPoly._raw({})) + root * carry
        return quotient, remainder

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        return format_plain(self)


def _monomial_text(exp, sep="*") -> str:
    parts = []
    for name, e in zip(VARS, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


def format_plain(p: MPoly) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for idx, (exp, c) in enumerate(terms):
        mono = _monomial_text(exp)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def poly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute(p: MPoly, bindings: Mapping) -> MPoly:
    return p.substitute(bindings)


def poly_sum(polys: Iterable) -> MPoly:
    total = MPoly()
    for q in polys:
        total = total + q
    return total


X = MPoly.var("x")
X1 = MPoly.var("x1")
X2 = MPoly.var("x2")
LAM = MPoly.var("lambda")
ONE = MPoly.const(1)
ZERO = MPoly()
