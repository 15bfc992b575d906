"""
BMOA

Oscillation, duality and Carleson estimators for BMOA seminorms and the
multiplicative Carleson bound.
"""

from .seminorms import (
    SeminormKind,
    SeminormEstimate,
    osc_seminorm,
    dual_seminorm,
    carleson_ratio,
    carleson_seminorm,
    carleson_sizes,
    carleson_multiplicativity_check,
    default_dual_family,
    default_carleson_family,
    bmoa_estimates,
    equivalence_ratio_report,
)

__all__ = [
    "SeminormKind",
    "SeminormEstimate",
    "osc_seminorm",
    "dual_seminorm",
    "carleson_ratio",
    "carleson_seminorm",
    "carleson_sizes",
    "carleson_multiplicativity_check",
    "default_dual_family",
    "default_carleson_family",
    "bmoa_estimates",
    "equivalence_ratio_report",
]
