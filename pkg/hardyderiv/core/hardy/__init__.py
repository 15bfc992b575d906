"""
Hardy Space Analysis

Analytic logarithms and square roots, H^1_0 symbols, their square
decomposition, Fejer-type means and random samplers.
"""

from .branches import (
    BranchResult,
    analytic_log,
    analytic_sqrt,
    closed_disc_zeros,
    log_with_residual,
    sqrt_with_residual,
    winding_number,
)
from .symbols import (
    SymbolH1,
    SquareDecomposition,
    decompose_squares,
    default_truncation,
    fejer_truncate,
    random_h2_zero,
    random_poly,
    random_symbol,
    sample_rng,
    splitting_constant,
    vallee_poussin_mean,
)

__all__ = [
    "BranchResult",
    "analytic_log",
    "analytic_sqrt",
    "closed_disc_zeros",
    "log_with_residual",
    "sqrt_with_residual",
    "winding_number",
    "SymbolH1",
    "SquareDecomposition",
    "decompose_squares",
    "default_truncation",
    "fejer_truncate",
    "random_h2_zero",
    "random_poly",
    "random_symbol",
    "sample_rng",
    "splitting_constant",
    "vallee_poussin_mean",
]
