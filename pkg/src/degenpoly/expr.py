"""Parse small polynomial expressions such as ``"t^2 - 1/3*t"`` or ``"1 - x + lambda"``."""

from __future__ import annotations

import ast
from fractions import Fraction

from .core import MPoly
from .degenerate import falling_factorial

_NAMES = {"x": "x", "x1": "x1", "x2": "x2", "lambda": "lambda", "lam": "lambda", "λ": "lambda"}


def parse_poly(text: str, t_as: str = "x") -> MPoly:
    """Parse an expression into an MPoly.

    Accepts integer/decimal literals, the variables x, x1, x2, lambda (alias
    lam), ``t`` (mapped to ``t_as``), ``+ - *``, division by constants, ``^`` or
    ``**`` with non-negative integer exponents, and ``ff(arg, n)`` /
    ``ff(arg, n, -1)`` for lambda-falling factorials.
    """
    source = text.replace("^", "**").replace("λ", "lambda")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}: {exc.msg}") from None
    names = dict(_NAMES, t=t_as)
    return _walk(tree.body, names, text)


def _walk(node, names, text) -> MPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        # floats only through their decimal text, so "0.5" is exactly 1/2
        return MPoly.const(Fraction(str(node.value)))
    if isinstance(node, ast.Name):
        if node.id not in names:
            raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
        return MPoly.var(names[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _walk(node.operand, names, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _walk(node.left, names, text)
        right = _walk(node.right, names, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise ValueError(f"division only by nonzero constants in {text!r}")
            return left / right.constant_value()
        if isinstance(node.op, ast.Pow):
            if not right.is_constant():
                raise ValueError(f"exponent must be a constant in {text!r}")
            e = right.constant_value()
            if e.denominator != 1 or e < 0:
                raise ValueError(f"exponent must be a non-negative integer in {text!r}")
            return left ** int(e)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "ff":
        args = [_walk(a, names, text) for a in node.args]
        if len(args) not in (2, 3) or not all(a.is_constant() for a in args[1:]):
            raise ValueError(f"ff takes (arg, n[, sign]) with constant n and sign in {text!r}")
        n = args[1].constant_value()
        sign = args[2].constant_value() if len(args) == 3 else 1
        if n.denominator != 1 or n < 0 or sign not in (1, -1):
            raise ValueError(f"bad ff arguments in {text!r}")
        return falling_factorial(args[0], int(n), int(sign))
    raise ValueError(f"unsupported syntax in {text!r}")


def parse_binding(text: str):
    """``"lambda=1/2"`` -> ("lambda", MPoly)."""
    if "=" not in text:
        raise ValueError(f"expected var=value, got {text!r}")
    name, value = text.split("=", 1)
    name = name.strip()
    if name not in _NAMES:
        raise ValueError(f"unknown variable {name!r}")
    return _NAMES[name], parse_poly(value)
