"""
Analytic Polynomials

Coefficient-level representation of analytic polynomials p(z) = sum c_n z^n,
the common currency of every other subsystem: test functions f and g,
symbols h, square-root factors k and antiderivatives u are all AnalyticPoly.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Union

import numpy as np

from ..config.central_config import get_config
from ..errors import InputError, PreconditionError

Scalar = Union[int, float, complex, np.number]


@dataclass(frozen=True, eq=False)
class AnalyticPoly:
    """
    Finite Taylor coefficient sequence c_0..c_N.

    The degree is the index of the last stored coefficient, which may be zero.
    Instances are immutable: the coefficient array is read-only.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if arr.size == 0:
            arr = np.zeros(1, dtype=np.complex128)
        if not np.all(np.isfinite(arr)):
            raise InputError("Polynomial coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def zero(cls) -> "AnalyticPoly":
        return cls(np.zeros(1))

    @classmethod
    def constant(cls, value: Scalar) -> "AnalyticPoly":
        return cls(np.array([value]))

    @classmethod
    def one(cls) -> "AnalyticPoly":
        return cls.constant(1.0)

    @classmethod
    def monomial(cls, n: int, coefficient: Scalar = 1.0) -> "AnalyticPoly":
        """Return coefficient * z**n."""
        if n < 0:
            raise PreconditionError(f"Monomial exponent must be nonnegative, got {n}")
        coeffs = np.zeros(n + 1, dtype=np.complex128)
        coeffs[n] = coefficient
        return cls(coeffs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> "AnalyticPoly":
        """Build from [[re, im], ...] pairs starting at the constant term."""
        try:
            values = [complex(float(re), float(im)) for re, im in pairs]
        except (TypeError, ValueError) as e:
            raise InputError(f"Coefficients must be [re, im] pairs: {e}")
        return cls(np.array(values, dtype=np.complex128))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def coefficient(self, n: int) -> complex:
        """Taylor coefficient of z**n (zero beyond the stored degree)."""
        if 0 <= n <= self.degree:
            return complex(self.coeffs[n])
        return 0j

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def trimmed(self) -> "AnalyticPoly":
        """Drop trailing zero coefficients (keeps at least the constant term)."""
        nonzero = np.flatnonzero(self.coeffs)
        if nonzero.size == 0:
            return AnalyticPoly.zero()
        return AnalyticPoly(self.coeffs[: nonzero[-1] + 1])

    def truncated(self, degree: int) -> "AnalyticPoly":
        """Taylor truncation to the given degree."""
        return AnalyticPoly(self.padded(degree + 1)[: degree + 1])

    def padded(self, length: int) -> np.ndarray:
        """Coefficient array zero-padded to at least ``length`` entries."""
        if length <= self.coeffs.size:
            return np.array(self.coeffs)
        out = np.zeros(length, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        return out

    def shifted(self, k: int) -> "AnalyticPoly":
        """Return z**k * p."""
        return AnalyticPoly(np.concatenate([np.zeros(k, dtype=np.complex128), self.coeffs]))

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def __add__(self, other: Union["AnalyticPoly", Scalar]) -> "AnalyticPoly":
        if not isinstance(other, AnalyticPoly):
            other = AnalyticPoly.constant(other)
        length = max(self.coeffs.size, other.coeffs.size)
        return AnalyticPoly(self.padded(length) + other.padded(length))

    __radd__ = __add__

    def __neg__(self) -> "AnalyticPoly":
        return AnalyticPoly(-self.coeffs)

    def __sub__(self, other: Union["AnalyticPoly", Scalar]) -> "AnalyticPoly":
        if not isinstance(other, AnalyticPoly):
            other = AnalyticPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "AnalyticPoly":
        return AnalyticPoly.constant(other) - self

    def __mul__(self, other: Union["AnalyticPoly", Scalar]) -> "AnalyticPoly":
        if isinstance(other, AnalyticPoly):
            return poly_multiply(self, other)
        return AnalyticPoly(self.coeffs * complex(other))

    def __rmul__(self, other: Scalar) -> "AnalyticPoly":
        return AnalyticPoly(self.coeffs * complex(other))

    def __truediv__(self, other: Scalar) -> "AnalyticPoly":
        return AnalyticPoly(self.coeffs / complex(other))

    def allclose(self, other: "AnalyticPoly", atol: float = 1e-12, rtol: float = 0.0) -> bool:
        """Coefficientwise comparison after zero padding."""
        length = max(self.coeffs.size, other.coeffs.size)
        return bool(np.allclose(self.padded(length), other.padded(length), atol=atol, rtol=rtol))

    def l2_norm_squared(self) -> float:
        """Squared H^2 norm with arc-length normalization: 2*pi*sum |c_n|^2."""
        return float(2.0 * np.pi * np.sum(np.abs(self.coeffs) ** 2))

    def to_pairs(self) -> List[List[float]]:
        return [[float(c.real), float(c.imag)] for c in self.coeffs]

    def __repr__(self) -> str:
        return f"AnalyticPoly(degree={self.degree}, coeffs={np.array2string(self.coeffs, precision=6)})"


def _check_degree_cap(degree: int) -> None:
    cap = get_config().get("numerics.degree_cap")
    if degree > cap:
        raise PreconditionError(
            f"Polynomial degree {degree} exceeds the configured cap {cap}",
            {"degree": degree, "degree_cap": cap},
        )


def poly_multiply(p: AnalyticPoly, q: AnalyticPoly) -> AnalyticPoly:
    """
    Product of two analytic polynomials.

    Args:
        p: First factor
        q: Second factor

    Returns:
        Convolution of the coefficient sequences, of degree deg p + deg q
    """
    _check_degree_cap(p.degree + q.degree)
    return AnalyticPoly(np.convolve(p.coeffs, q.coeffs))


def derivative(p: AnalyticPoly) -> AnalyticPoly:
    """Coefficientwise derivative p'."""
    if p.degree == 0:
        return AnalyticPoly.zero()
    n = np.arange(1, p.degree + 1)
    return AnalyticPoly(p.coeffs[1:] * n)


def u_of(f: AnalyticPoly, g: AnalyticPoly) -> AnalyticPoly:
    """
    Antiderivative of f'g vanishing at the origin.

    The coefficients are u_n = (f'g)_{n-1} / n for n >= 1 and u_0 = 0, so
    u' = f'g holds exactly at coefficient level.

    Args:
        f: Function being differentiated
        g: Multiplier

    Returns:
        The polynomial u of degree deg(f'g) + 1
    """
    w = poly_multiply(derivative(f), g)
    n = np.arange(1, w.coeffs.size + 1)
    return AnalyticPoly(np.concatenate([[0.0], w.coeffs / n]))


def poly_exp_truncated(a: AnalyticPoly, degree: int) -> AnalyticPoly:
    """
    Taylor coefficients of exp(a) through the given degree.

    Uses the recurrence n e_n = sum_{k=1..n} k a_k e_{n-k} with e_0 = exp(a_0),
    which only involves coefficients of a up to ``degree``.
    """
    if degree < 0:
        raise PreconditionError(f"Degree must be nonnegative, got {degree}")
    a_coeffs = a.padded(degree + 1)[: degree + 1]
    weighted = a_coeffs * np.arange(degree + 1)
    e = np.zeros(degree + 1, dtype=np.complex128)
    e[0] = np.exp(a_coeffs[0])
    for n in range(1, degree + 1):
        # weighted[1..n] against e[n-1..0]
        e[n] = np.dot(weighted[1: n + 1], e[n - 1:: -1][:n]) / n
    return AnalyticPoly(e)


def exp_series_partial_sum(a: AnalyticPoly, terms: int) -> AnalyticPoly:
    """Partial sum sum_{j=0..terms} a**j / j! of the exponential series."""
    term = AnalyticPoly.one()
    total = AnalyticPoly.one()
    for j in range(1, terms + 1):
        term = poly_multiply(term, a) / j
        total = total + term
    return total
