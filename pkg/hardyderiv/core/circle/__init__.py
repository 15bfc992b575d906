"""
Circle Functions

Analytic polynomials, their products and antiderivatives, and boundary norms.
"""

from .poly import (
    AnalyticPoly,
    poly_multiply,
    derivative,
    u_of,
    poly_exp_truncated,
    exp_series_partial_sum,
)
from .grid import BoundaryGrid, sup_norm, inflated_sup_norm, lp_norm, next_power_of_two, auto_grid_size

__all__ = [
    "AnalyticPoly",
    "poly_multiply",
    "derivative",
    "u_of",
    "poly_exp_truncated",
    "exp_series_partial_sum",
    "BoundaryGrid",
    "sup_norm",
    "inflated_sup_norm",
    "lp_norm",
    "next_power_of_two",
    "auto_grid_size",
]
