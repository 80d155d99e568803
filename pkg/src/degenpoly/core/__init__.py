"""Exact scalar, polynomial, rational-function and truncated-series arithmetic."""

from .linrational import LinRational, factor_poly, rf_combine
from .mpoly import LAM, ONE, VARS, X, X1, X2, ZERO, MPoly, poly_arith, poly_sum, substitute, var_index
from .series import TruncSeries, series_mul

__all__ = [
    "LAM", "ONE", "VARS", "X", "X1", "X2", "ZERO",
    "LinRational", "MPoly", "TruncSeries",
    "factor_poly", "poly_arith", "poly_sum", "rf_combine", "series_mul", "substitute", "var_index",
]
