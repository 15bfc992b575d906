"""
Symbols and Square Decomposition

H^1_0 symbols of derivations, their Fejer and de la Vallee Poussin means, the
splitting h = alpha*z + z^2*F = alpha*z + k1^2 + k2^2 into squares of H^2_0
functions, and seeded random samplers for symbols and test polynomials.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from ..circle.grid import lp_norm, sup_norm
from ..circle.poly import AnalyticPoly, Scalar, poly_multiply
from ..config.central_config import get_config
from ..errors import DecompositionError, DomainError, InputError, PreconditionError
from ..logging.logger import get_logger
from .branches import sqrt_with_residual

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class SymbolH1:
    """
    Truncated element h of H^1_0, the parameter of the derivation D_h.

    The constant coefficient is zero by construction; ``from_coeffs`` takes
    the coefficients of z, z^2, ... so it cannot even be supplied.
    """

    poly: AnalyticPoly

    def __post_init__(self):
        if self.poly.coefficient(0) != 0:
            raise PreconditionError(
                "Symbol must vanish at the origin",
                {"constant_term": [self.poly.coefficient(0).real, self.poly.coefficient(0).imag]},
            )

    @classmethod
    def zero(cls) -> "SymbolH1":
        return cls(AnalyticPoly.zero())

    @classmethod
    def monomial(cls, n: int, coefficient: Scalar = 1.0) -> "SymbolH1":
        if n < 1:
            raise InputError(f"Symbol monomials start at z^1, got n={n}")
        return cls(AnalyticPoly.monomial(n, coefficient))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "SymbolH1":
        """Build from the coefficients of z^1..z^N."""
        values = np.asarray(list(coeffs), dtype=np.complex128)
        return cls(AnalyticPoly(np.concatenate([[0.0], values])))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> "SymbolH1":
        """Build from [[re, im], ...] pairs for z^1..z^N."""
        if isinstance(pairs, (str, bytes, dict)):
            raise InputError("Symbol coefficients must be a list of [re, im] pairs")
        try:
            values = list(pairs)
        except TypeError:
            raise InputError("Symbol coefficients must be a list of [re, im] pairs", {"value": repr(pairs)})
        return cls(AnalyticPoly.from_pairs([[0.0, 0.0], *values]))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def coefficient(self, n: int) -> complex:
        return self.poly.coefficient(n)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "SymbolH1") -> "SymbolH1":
        return SymbolH1(self.poly + other.poly)

    def __sub__(self, other: "SymbolH1") -> "SymbolH1":
        return SymbolH1(self.poly - other.poly)

    def __mul__(self, scalar: Scalar) -> "SymbolH1":
        return SymbolH1(self.poly * scalar)

    __rmul__ = __mul__

    def to_pairs(self) -> list:
        """Coefficient pairs for z^1..z^N."""
        return self.poly.to_pairs()[1:]

    def to_dict(self) -> Dict[str, Any]:
        return {"coeffs": self.to_pairs()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SymbolH1":
        if "coeffs" not in data:
            raise InputError("Symbol dictionary needs a 'coeffs' list")
        return cls.from_pairs(data["coeffs"])


@dataclass(frozen=True)
class SquareDecomposition:
    """h = alpha*z + k1^2 + k2^2 with k1, k2 in H^2_0 (truncated)."""

    alpha: complex
    F: AnalyticPoly
    c: float
    k1: AnalyticPoly
    k2: AnalyticPoly
    tail_error: float
    n_out: int
    c_rule: str = "zero"
    sqrt_residuals: Dict[str, float] = field(default_factory=dict)

    def reconstruct(self) -> AnalyticPoly:
        """alpha*z + k1^2 + k2^2."""
        return AnalyticPoly.monomial(1, self.alpha) + poly_multiply(self.k1, self.k1) + poly_multiply(self.k2, self.k2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": [self.alpha.real, self.alpha.imag],
            "c": self.c,
            "c_rule": self.c_rule,
            "n_out": self.n_out,
            "tail_error": self.tail_error,
            "k1_coeffs": self.k1.to_pairs(),
            "k2_coeffs": self.k2.to_pairs(),
        }


def default_truncation(h: SymbolH1) -> int:
    """Default square-root truncation degree 4*deg(h) + 64."""
    return 4 * h.degree + 64


def splitting_constant(F: AnalyticPoly, delta: Optional[float] = None) -> Tuple[float, str]:
    """
    Splitting constant c = max(||F||_1, (1 + delta) * sup|F|) and the rule that won.

    Any c works algebraically; taking it above sup|F| keeps F + c and F - c
    free of zeros on the closed disc.
    """
    delta = get_config().get("hardy.split_delta") if delta is None else delta
    l1 = lp_norm(F, 1)
    inflated_sup = (1.0 + delta) * sup_norm(F)
    if l1 >= inflated_sup:
        return l1, "l1_norm"
    return inflated_sup, "inflated_sup"


def decompose_squares(h: SymbolH1, n_out: Optional[int] = None) -> SquareDecomposition:
    """
    Split h = alpha*z + z^2*F into alpha*z + k1^2 + k2^2.

    Args:
        h: Symbol
        n_out: Truncation degree of the square roots (default 4*deg h + 64)

    Returns:
        SquareDecomposition with k1 = z*sqrt((F+c)/2), k2 = z*sqrt((F-c)/2)

    Raises:
        DecompositionError: if a square root fails although c exceeds sup|F|
    """
    n_out = default_truncation(h) if n_out is None else n_out
    if n_out < 1:
        raise PreconditionError(f"Truncation degree must be at least 1, got {n_out}")

    alpha = h.coefficient(1)
    F = AnalyticPoly(h.poly.coeffs[2:]) if h.degree >= 2 else AnalyticPoly.zero()

    if F.is_zero():
        return SquareDecomposition(
            alpha=alpha,
            F=F,
            c=0.0,
            k1=AnalyticPoly.zero(),
            k2=AnalyticPoly.zero(),
            tail_error=0.0,
            n_out=n_out,
        )

    c, c_rule = splitting_constant(F)
    try:
        plus = sqrt_with_residual((F + c) / 2.0, n_out - 1)
        minus = sqrt_with_residual((F - c) / 2.0, n_out - 1)
    except DomainError as e:
        raise DecompositionError(
            "Square root failed after inflating the splitting constant",
            {"c": c, "c_rule": c_rule, "cause": e.to_dict()},
        ) from e

    k1 = plus.poly.shifted(1)
    k2 = minus.poly.shifted(1)
    reconstructed = AnalyticPoly.monomial(1, alpha) + poly_multiply(k1, k1) + poly_multiply(k2, k2)
    tail_error = float(np.sqrt((reconstructed - h.poly).l2_norm_squared()))

    tolerance = get_config().get("hardy.reconstruction_tol")
    scale = max(1.0, float(np.sqrt(h.poly.l2_norm_squared())))
    if tail_error > tolerance * scale:
        logger.warning(
            "square decomposition residual above tolerance",
            degree=h.degree,
            n_out=n_out,
            tail_error=tail_error,
            tolerance=tolerance,
        )
    else:
        logger.debug("square decomposition built", degree=h.degree, c=c, c_rule=c_rule, tail_error=tail_error)

    return SquareDecomposition(
        alpha=alpha,
        F=F,
        c=c,
        k1=k1,
        k2=k2,
        tail_error=tail_error,
        n_out=n_out,
        c_rule=c_rule,
        sqrt_residuals={"plus": plus.residual, "minus": minus.residual},
    )


def fejer_weights(N: int, length: int) -> np.ndarray:
    """Cesaro weights max(0, 1 - n/(N+1)) for n = 0..length-1."""
    n = np.arange(length)
    return np.clip(1.0 - n / (N + 1.0), 0.0, None)


def fejer_truncate(h: SymbolH1, N: int) -> SymbolH1:
    """
    Fejer mean sigma_N h: coefficient n is scaled by 1 - n/(N+1) for n <= N.

    Args:
        h: Symbol
        N: Order of the mean (N >= 0)

    Returns:
        Symbol of degree <= N
    """
    if N < 0:
        raise PreconditionError(f"Fejer order must be nonnegative, got {N}")
    coeffs = h.poly.coeffs * fejer_weights(N, h.poly.coeffs.size)
    return SymbolH1(AnalyticPoly(coeffs[: N + 1]))


def vallee_poussin_mean(h: SymbolH1, N: int) -> SymbolH1:
    """
    de la Vallee Poussin mean 2*sigma_{2N+1} h - sigma_N h.

    It fixes every coefficient of index <= N, so it reproduces symbols of
    degree <= N, and like the Fejer mean it has norm at most 3 on L^1.
    """
    if N < 0:
        raise PreconditionError(f"Mean order must be nonnegative, got {N}")
    return fejer_truncate(h, 2 * N + 1) * 2.0 - fejer_truncate(h, N)


def sample_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for the (seed, index) stream."""
    return np.random.default_rng([int(seed), int(index)])


def random_poly(rng: np.random.Generator, degree: int) -> AnalyticPoly:
    """Polynomial with i.i.d. standard complex Gaussian coefficients 0..degree."""
    if degree < 0:
        raise PreconditionError(f"Degree must be nonnegative, got {degree}")
    coeffs = (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)) / np.sqrt(2.0)
    return AnalyticPoly(coeffs)


def random_h2_zero(rng: np.random.Generator, degree: int) -> AnalyticPoly:
    """Random polynomial of the given degree vanishing at the origin (a truncated H^2_0 factor)."""
    if degree < 1:
        raise PreconditionError(f"Degree must be at least 1, got {degree}")
    return random_poly(rng, degree - 1).shifted(1)


def random_symbol(degree: int, seed: int, index: int = 0, decay: Optional[float] = None) -> SymbolH1:
    """
    Random symbol of the given degree with geometrically damped coefficients.

    Coefficient n is a standard complex Gaussian times decay**n, so the square
    roots in the decomposition have fast decaying Taylor tails.
    """
    if degree < 0:
        raise InputError(f"Symbol degree must be nonnegative, got {degree}")
    if degree == 0:
        return SymbolH1.zero()
    decay = get_config().get("sampling.symbol_decay") if decay is None else decay
    rng = sample_rng(seed, index)
    coeffs = random_poly(rng, degree - 1).coeffs * decay ** np.arange(1, degree + 1)
    return SymbolH1.from_coeffs(coeffs)
