"""
Disc Measures

Boundary and interior log-weight densities on the closed disc, the
Littlewood-Paley inner product and the radial quadrature rules behind it.
"""

from .quadrature import carleson_radial_rule, gauss_legendre_unit, lambda_moment_quad, log_weight_rule
from .disc_measure import (
    MeasureKind,
    MeasureComponent,
    DiscMeasure,
    lambda_moment,
    lambda_norm_squared,
    lambda_inner_closed,
    lambda_inner_quad,
    component_norm_squared,
    l2_norm_measure,
    measure_scale_sum,
    measure_mass_quadrature,
)

__all__ = [
    "carleson_radial_rule",
    "gauss_legendre_unit",
    "lambda_moment_quad",
    "log_weight_rule",
    "MeasureKind",
    "MeasureComponent",
    "DiscMeasure",
    "lambda_moment",
    "lambda_norm_squared",
    "lambda_inner_closed",
    "lambda_inner_quad",
    "component_norm_squared",
    "l2_norm_measure",
    "measure_scale_sum",
    "measure_mass_quadrature",
]
