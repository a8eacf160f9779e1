"""Exact scalar, Laurent polynomial, rational and truncated-series arithmetic."""

from .poly import (
    ExactRational,
    LaurentPoly,
    NegativeExponent,
    SubstitutionNotInvertible,
    ONE,
    ZERO,
    poly_arith,
    q,
    substitute,
    var,
)
from .rational import RationalExpr, ZeroDivision, factor, sum_fractions
from .render import render_in, render_poly, render_rational
from .series import (
    Comparison,
    Mismatch,
    NotFormallySmall,
    SmallSymbolMismatch,
    TruncatedSeries,
    graded_key,
    series_arith,
    series_equal,
)
from .symbols import Context, DEFAULT, ScaleUnavailable

__all__ = [
    "Comparison",
    "Context",
    "DEFAULT",
    "ExactRational",
    "LaurentPoly",
    "Mismatch",
    "NegativeExponent",
    "NotFormallySmall",
    "ONE",
    "RationalExpr",
    "ScaleUnavailable",
    "SmallSymbolMismatch",
    "SubstitutionNotInvertible",
    "TruncatedSeries",
    "ZERO",
    "ZeroDivision",
    "factor",
    "graded_key",
    "poly_arith",
    "q",
    "render_in",
    "render_poly",
    "render_rational",
    "series_arith",
    "series_equal",
    "substitute",
    "sum_fractions",
    "var",
]
