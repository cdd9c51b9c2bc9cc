"""Exact rational core: truncated power series, PBW extraction, and
degree-truncated linear algebra for commutative and free associative
graded algebras.

Everything here computes over Q with `fractions.Fraction`; no floats,
no rounding, anywhere.
"""

from x3top.core.rationals import Q, parse_rational, format_rational
from x3top.core.series import (
    PowerSeries,
    series_from_product,
    pbw_extract,
    pbw_extract_log,
)
from x3top.core.ncpoly import NcElement, graded_dim_quotient_nc
from x3top.core.compoly import CommPoly, graded_dim_quotient_comm

__all__ = [
    "Q",
    "parse_rational",
    "format_rational",
    "PowerSeries",
    "series_from_product",
    "pbw_extract",
    "pbw_extract_log",
    "NcElement",
    "graded_dim_quotient_nc",
    "CommPoly",
    "graded_dim_quotient_comm",
]
