"""Rational functions whose denominators split into lambda powers and linear factors."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .mpoly import LAM, ONE, X, MPoly


def _factor_sort_key(key):
    anchor, k = key
    return (anchor is not None, anchor if anchor is not None else 0, k)


def factor_poly(anchor, k: int) -> MPoly:
    """The linear form (x - k*lambda) for anchor None, else (anchor - k*lambda)."""
    head = X if anchor is None else MPoly.const(anchor)
    return head - k * LAM


def _normalize_key(key):
    # bare ints name the common (x - k*lambda) factor
    if isinstance(key, int):
        return (None, key)
    anchor, k = key
    return (None if anchor is None else Fraction(anchor), int(k))


class LinRational:
    """numer / (lambda**lambda_power * prod(factor ** mult)).

    Factors are keyed by ``(anchor, k)``: anchor ``None`` denotes x - k*lambda,
    a rational anchor c denotes c - k*lambda (these appear once x has been
    specialized to a number). Construction reduces the fraction so that no
    listed factor and no power of lambda divides the numerator.
    """

    __slots__ = ("numer", "lambda_power", "factors")

    def __init__(self, numer=None, lambda_power: int = 0, factors: Mapping | None = None):
        numer = ONE if numer is None else MPoly.coerce(numer)
        if lambda_power < 0:
            raise ValueError("lambda_power must be >= 0")
        merged: dict = {}
        for key, mult in (factors or {}).items():
            if mult < 0:
                raise ValueError("factor multiplicities must be >= 0")
            if mult:
                key = _normalize_key(key)
                merged[key] = merged.get(key, 0) + mult
        numer, lambda_power, merged = _reduce(numer, lambda_power, merged)
        self.numer = numer
        self.lambda_power = lambda_power
        self.factors = tuple(sorted(merged.items(), key=lambda kv: _factor_sort_key(kv[0])))

    @classmethod
    def coerce(cls, value) -> "LinRational":
        if isinstance(value, LinRational):
            return value
        return cls(MPoly.coerce(value))

    @property
    def linear_factors(self) -> dict:
        return dict(self.factors)

    def denominator(self) -> MPoly:
        d = LAM ** self.lambda_power
        for (anchor, k), mult in self.factors:
            d = d * factor_poly(anchor, k) ** mult
        return d

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def is_polynomial(self) -> bool:
        return self.lambda_power == 0 and not self.factors

    def to_mpoly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.numer

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            other = LinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return rf_combine([self, other], [1, 1])

    __radd__ = __add__

    def __neg__(self):
        return LinRational._trusted(-self.numer, self.lambda_power, self.factors)

    def __sub__(self, other):
        try:
            other = LinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return rf_combine([self, other], [1, -1])

    def __rsub__(self, other):
        try:
            other = LinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return rf_combine([other, self], [1, -1])

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, MPoly):
            return LinRational._trusted(self.numer * Fraction(other), self.lambda_power, self.factors) \
                if other else LinRational(MPoly())
        try:
            other = LinRational.coerce(other)
        except TypeError:
            return NotImplemented
        factors = dict(self.factors)
        for key, mult in other.factors:
            factors[key] = factors.get(key, 0) + mult
        return LinRational(self.numer * other.numer, self.lambda_power + other.lambda_power, factors)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = LinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.numer * other.denominator() == other.numer * self.denominator()

    def __hash__(self):
        return hash((self.numer, self.lambda_power, self.factors))

    @classmethod
    def _trusted(cls, numer, lambda_power, factors):
        obj = cls.__new__(cls)
        obj.numer = numer
        obj.lambda_power = lambda_power if numer else 0
        obj.factors = tuple(factors) if numer else ()
        return obj

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, bindings: Mapping) -> Fraction:
        den = self.denominator().evaluate(bindings)
        if not den:
            raise ZeroDivisionError(f"pole of {self} at {dict(bindings)}")
        return self.numer.evaluate(bindings) / den

    def substitute_x(self, value) -> "LinRational":
        """Specialize x to a rational number; (x - k*lambda) becomes (value - k*lambda)."""
        value = Fraction(value)
        factors: dict = {}
        for (anchor, k), mult in self.factors:
            key = (value, k) if anchor is None else (anchor, k)
            factors[key] = factors.get(key, 0) + mult
        return LinRational(self.numer.substitute({"x": value}), self.lambda_power, factors)

    def __repr__(self):
        return f"LinRational({self})"

    def __str__(self):
        den = []
        if self.lambda_power:
            den.append("lambda" if self.lambda_power == 1 else f"lambda^{self.lambda_power}")
        for (anchor, k), mult in self.factors:
            head = "x" if anchor is None else str(anchor)
            if k == 0:
                body = head
            elif k > 0:
                body = f"({head} - {k if k != 1 else ''}lambda)"
            else:
                body = f"({head} + {-k if k != -1 else ''}lambda)"
            den.append(body if mult == 1 else f"{body}^{mult}")
        if not den:
            return str(self.numer)
        return f"({self.numer}) / ({' * '.join(den)})"


def _divide_factor(numer: MPoly, anchor, k):
    """Exact quotient of numer by the factor, or None if it does not divide."""
    if anchor is None:
        q, r = numer.divide_linear("x", k * LAM)
        return q if r.is_zero() else None
    # anchor - k*lambda = -k * (lambda - anchor/k)
    q, r = numer.divide_linear("lambda", Fraction(anchor, 1) / k)
    return q * Fraction(-1, k) if r.is_zero() else None


def _lambda_divisible(numer: MPoly) -> bool:
    return all(exp[3] >= 1 for exp, _ in numer.items())


def _reduce(numer: MPoly, lambda_power: int, factors: dict):
    if numer.is_zero():
        return numer, 0, {}
    for key in list(factors):
        anchor, k = key
        if anchor is not None and k == 0:
            if anchor == 0:
                raise ZeroDivisionError("constant zero factor in denominator")
            numer = numer * (1 / anchor) ** factors.pop(key)
        elif anchor == 0:
            # 0 - k*lambda is a lambda power in disguise
            mult = factors.pop(key)
            numer = numer * Fraction(-1, k) ** mult
            lambda_power += mult
    changed = True
    while changed:
        changed = False
        while lambda_power and _lambda_divisible(numer):
            numer = MPoly({(e[0], e[1], e[2], e[3] - 1): c for e, c in numer.items()})
            lambda_power -= 1
            changed = True
        for key in list(factors):
            while factors.get(key):
                q = _divide_factor(numer, *key)
                if q is None:
                    break
                numer = q
                factors[key] -= 1
                changed = True
            if not factors.get(key):
                factors.pop(key, None)
    return numer, lambda_power, factors


def rf_combine(terms: Sequence, weights: Sequence | None = None) -> LinRational:
    """Weighted sum over a common denominator, reduced once at the end."""
    terms = [LinRational.coerce(t) for t in terms]
    if weights is None:
        weights = [1] * len(terms)
    if len(weights) != len(terms):
        raise ValueError("terms and weights differ in length")
    pairs = [(t, Fraction(w)) for t, w in zip(terms, weights) if w and not t.is_zero()]
    if not pairs:
        return LinRational(MPoly())
    lam_power = max(t.lambda_power for t, _ in pairs)
    common: dict = {}
    for t, _ in pairs:
        for key, mult in t.factors:
            common[key] = max(common.get(key, 0), mult)
    numer = MPoly()
    for t, w in pairs:
        scale = LAM ** (lam_power - t.lambda_power)
        own = dict(t.factors)
        for key, mult in common.items():
            missing = mult - own.get(key, 0)
            if missing:
                scale = scale * factor_poly(*key) ** missing
        numer = numer + t.numer * scale * w
    return LinRational(numer, lam_power, common)
