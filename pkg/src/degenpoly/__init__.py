"""Exact degenerate Euler and Bernstein polynomials with identity and p-adic checks."""

from .bernstein import (
    BernsteinPoly,
    OperatorInput,
    PartialFraction,
    bernstein,
    bernstein2,
    bernstein_genfun_check,
    moment_extract,
    operator,
    partial_fractions,
)
from .core import LinRational, MPoly, TruncSeries, poly_arith, rf_combine, series_mul, substitute
from .degenerate import (
    degenerate_exp,
    euler_number,
    euler_polynomial,
    falling_factorial,
    fermionic_integral,
    higher_order_euler,
)
from .identities import registry, verify, verify_all
from .padic import (
    PadicContext,
    double_integral_check,
    euler_integral_check,
    fermionic_sum,
    functional_equation_check,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "bernstein",
    "bernstein2",
    "bernstein_genfun_check",
    "BernsteinPoly",
    "degenerate_exp",
    "double_integral_check",
    "euler_integral_check",
    "euler_number",
    "euler_polynomial",
    "falling_factorial",
    "fermionic_integral",
    "fermionic_sum",
    "functional_equation_check",
    "higher_order_euler",
    "LinRational",
    "moment_extract",
    "MPoly",
    "operator",
    "OperatorInput",
    "PadicContext",
    "partial_fractions",
    "PartialFraction",
    "poly_arith",
    "registry",
    "rf_combine",
    "series_mul",
    "substitute",
    "TruncSeries",
    "valuation",
    "verify",
    "verify_all",
]
