"""
Derivation Bilinear Form

A bounded derivation D from the disc algebra into its dual is determined by
an H^1_0 symbol h through

    D_h(f)(g) = integral over the circle of u * conj(h),   u(0) = 0, u' = f'g,

which by Parseval is 2*pi * sum_{n>=1} u_n * conj(h_n). Everything here is
exact coefficient arithmetic; no quadrature is involved.
"""

from typing import Callable, Optional

import numpy as np

from ..circle.grid import sup_norm
from ..circle.poly import AnalyticPoly, exp_series_partial_sum, poly_multiply, u_of
from ..config.central_config import get_config
from ..errors import PreconditionError
from ..hardy.symbols import SquareDecomposition, SymbolH1, decompose_squares
from ..logging.logger import get_logger

logger = get_logger(__name__)

Evaluator = Callable[[AnalyticPoly, AnalyticPoly], complex]


class DerivationForm:
    """
    The derivation D_h presented by its symbol.

    The square decomposition of the symbol is computed on first use and
    cached, since norm bounds and certificates all need it.
    """

    def __init__(self, symbol: SymbolH1, n_out: Optional[int] = None):
        """
        Initialize the derivation.

        Args:
            symbol: The H^1_0 symbol h
            n_out: Truncation degree for the square decomposition (default 4*deg h + 64)
        """
        self.symbol = symbol
        self.n_out = n_out
        self._decomposition: Optional[SquareDecomposition] = None

    @classmethod
    def from_coeffs(cls, coeffs) -> "DerivationForm":
        """Derivation whose symbol has the given coefficients of z^1..z^N."""
        return cls(SymbolH1.from_coeffs(coeffs))

    @property
    def decomposition(self) -> SquareDecomposition:
        if self._decomposition is None:
            self._decomposition = decompose_squares(self.symbol, self.n_out)
        return self._decomposition

    def __call__(self, f: AnalyticPoly, g: AnalyticPoly) -> complex:
        return bilinear_eval(self, f, g)

    def __add__(self, other: "DerivationForm") -> "DerivationForm":
        return DerivationForm(self.symbol + other.symbol)

    def scaled(self, c: complex) -> "DerivationForm":
        """D_{c*h}, which equals conj(c) * D_h."""
        return DerivationForm(self.symbol * c)

    def __repr__(self) -> str:
        return f"DerivationForm(degree={self.symbol.degree})"


def bilinear_eval(D: DerivationForm, f: AnalyticPoly, g: AnalyticPoly) -> complex:
    """
    Evaluate D_h(f)(g).

    Args:
        D: Derivation
        f: Argument of the derivation
        g: Test function paired against D(f)

    Returns:
        2*pi * sum_{n>=1} u_n * conj(h_n) with u = u_of(f, g)
    """
    h = D.symbol.poly.coeffs
    if f.degree == 0 or D.symbol.is_zero():
        return 0j
    u = u_of(f, g).coeffs
    top = min(u.size, h.size)
    if top <= 1:
        return 0j
    return complex(2.0 * np.pi * np.sum(u[1:top] * np.conj(h[1:top])))


def b_functional(D: DerivationForm, f: AnalyticPoly) -> complex:
    """B(D)(f) = D(f)(1)."""
    return bilinear_eval(D, f, AnalyticPoly.one())


def extract_symbol(evaluator: Evaluator, N: int) -> SymbolH1:
    """
    Recover the symbol of a derivation given only as a bilinear form.

    Args:
        evaluator: Callable (f, g) -> D(f)(g), linear in each argument
        N: Degree of the recovered symbol

    Returns:
        Symbol with h_n = conj(evaluator(z^n, 1)) / (2*pi) for n = 1..N
    """
    if N < 1:
        raise PreconditionError(f"Symbol degree must be at least 1, got {N}")
    one = AnalyticPoly.one()
    coeffs = [np.conj(complex(evaluator(AnalyticPoly.monomial(n), one))) / (2.0 * np.pi) for n in range(1, N + 1)]
    return SymbolH1.from_coeffs(coeffs)


def b_factorization_residual(D: DerivationForm, f: AnalyticPoly, g: AnalyticPoly) -> float:
    """|D(f)(g) - B(D)(u)| with u the antiderivative of f'g vanishing at 0."""
    return abs(bilinear_eval(D, f, g) - b_functional(D, u_of(f, g)))


def leibniz_residual(D: DerivationForm, f: AnalyticPoly, g: AnalyticPoly, k: AnalyticPoly) -> float:
    """|D(fg)(k) - D(f)(gk) - D(g)(fk)| for the dual bimodule actions."""
    fg = poly_multiply(f, g)
    lhs = bilinear_eval(D, fg, k)
    rhs = bilinear_eval(D, f, poly_multiply(g, k)) + bilinear_eval(D, g, poly_multiply(f, k))
    return abs(lhs - rhs)


def exp_trick_residual(
    D: DerivationForm,
    a: AnalyticPoly,
    g: AnalyticPoly,
    n_exp: Optional[int] = None,
) -> float:
    """
    Residual of D(e^a)(g) = D(a)(e^a * g) with e^a replaced by its partial sum.

    Args:
        D: Derivation
        a: Exponent, with grid sup norm at most ``derivation.exp_max_sup``
        g: Test function
        n_exp: Number of exponential series terms (``derivation.exp_terms`` by default)

    Returns:
        |D(E)(g) - D(a)(E*g)| where E = sum_{j<=n_exp} a^j / j!

    Raises:
        PreconditionError: if sup|a| exceeds the configured limit
    """
    config = get_config()
    n_exp = config.get("derivation.exp_terms") if n_exp is None else n_exp
    limit = config.get("derivation.exp_max_sup")

    measured = sup_norm(a)
    if measured > limit:
        raise PreconditionError(
            f"Exponent sup norm {measured:.6g} exceeds {limit}",
            {"sup_norm": measured, "limit": limit},
        )

    E = exp_series_partial_sum(a, n_exp)
    residual = abs(bilinear_eval(D, E, g) - bilinear_eval(D, a, poly_multiply(E, g)))
    logger.debug("exp trick evaluated", n_exp=n_exp, sup_norm=measured, residual=residual)
    return residual


def unit_vanishing_residual(D: DerivationForm, g: AnalyticPoly) -> float:
    """|D(1)(g)|, which vanishes for every derivation on a unital algebra."""
    return abs(bilinear_eval(D, AnalyticPoly.one(), g))
