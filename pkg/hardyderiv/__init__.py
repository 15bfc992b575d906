"""
hardyderiv - derivations from the disc algebra into its dual

Evaluates the bilinear form of a derivation from its H^1_0 symbol, recovers
symbols from derivations, builds explicit control measures and checks the
inequalities behind them on polynomial test data.
"""

__version__ = "0.1.0"

# Polynomials on the circle
from .core.circle.poly import AnalyticPoly, derivative, poly_multiply, u_of
from .core.circle.grid import lp_norm, sup_norm

# Symbols and the square decomposition
from .core.hardy.branches import analytic_log, analytic_sqrt
from .core.hardy.symbols import SquareDecomposition, SymbolH1, decompose_squares, fejer_truncate, random_symbol

# Derivations
from .core.derivations.form import DerivationForm, bilinear_eval, extract_symbol
from .core.derivations.gram import GramMatrix, gram_matrix, rank_and_singular_values
from .core.derivations.norms import fejer_tail_bound, norm_lower_bound_mc, norm_upper_bound

# Measures and certificates
from .core.measures.disc_measure import DiscMeasure, l2_norm_measure
from .core.pietsch.certificate import PietschCertificate, build_certificate, verify_certificate

# BMOA
from .core.bmoa.seminorms import carleson_seminorm, dual_seminorm, osc_seminorm

# Infrastructure
from .core.config.central_config import CentralConfig, get_config
from .core.errors import (
    DecompositionError,
    DomainError,
    HardyDerivError,
    InputError,
    PreconditionError,
    VerificationError,
)
from .core.logging.logger import get_logger
from .core.verification.runner import CheckRunner
from .core.verification.suite import acceptance_suite

__all__ = [
    "__version__",

    "AnalyticPoly",
    "derivative",
    "poly_multiply",
    "u_of",
    "lp_norm",
    "sup_norm",

    "analytic_log",
    "analytic_sqrt",
    "SquareDecomposition",
    "SymbolH1",
    "decompose_squares",
    "fejer_truncate",
    "random_symbol",

    "DerivationForm",
    "bilinear_eval",
    "extract_symbol",
    "GramMatrix",
    "gram_matrix",
    "rank_and_singular_values",
    "fejer_tail_bound",
    "norm_lower_bound_mc",
    "norm_upper_bound",

    "DiscMeasure",
    "l2_norm_measure",
    "PietschCertificate",
    "build_certificate",
    "verify_certificate",

    "carleson_seminorm",
    "dual_seminorm",
    "osc_seminorm",

    "CentralConfig",
    "get_config",
    "DecompositionError",
    "DomainError",
    "HardyDerivError",
    "InputError",
    "PreconditionError",
    "VerificationError",
    "get_logger",
    "CheckRunner",
    "acceptance_suite",
]


def get_version() -> str:
    """Get the current version of hardyderiv."""
    return __version__


def get_info() -> dict:
    """Get information about the hardyderiv package."""
    return {
        "name": "hardyderiv",
        "version": __version__,
        "description": "Derivations from the disc algebra into its dual: symbols, control measures, checks",
    }
