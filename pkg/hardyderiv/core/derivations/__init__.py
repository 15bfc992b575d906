"""
Derivations

The derivation bilinear form D_h, symbol extraction, algebraic identity
residuals, Gram matrices and operator norm bounds.
"""

from .form import (
    DerivationForm,
    Evaluator,
    bilinear_eval,
    b_functional,
    extract_symbol,
    b_factorization_residual,
    leibniz_residual,
    exp_trick_residual,
    unit_vanishing_residual,
)
from .gram import GramMatrix, gram_matrix, rank_and_singular_values
from .norms import (
    TAIL_SCHEMES,
    norm_upper_bound,
    monomial_upper_bound,
    norm_lower_bound_mc,
    fejer_tail_bound,
)

__all__ = [
    "DerivationForm",
    "Evaluator",
    "bilinear_eval",
    "b_functional",
    "extract_symbol",
    "b_factorization_residual",
    "leibniz_residual",
    "exp_trick_residual",
    "unit_vanishing_residual",
    "GramMatrix",
    "gram_matrix",
    "rank_and_singular_values",
    "TAIL_SCHEMES",
    "norm_upper_bound",
    "monomial_upper_bound",
    "norm_lower_bound_mc",
    "fejer_tail_bound",
]
