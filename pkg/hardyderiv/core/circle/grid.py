"""
Boundary Grids

Uniform sampling of analytic polynomials on the unit circle and the norms
computed from those samples. Arc length is unnormalized, so the circle has
total mass 2*pi and ||1||_p = (2*pi)**(1/p).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config.central_config import get_config
from ..errors import PreconditionError
from ..logging.logger import get_logger
from .poly import AnalyticPoly

logger = get_logger(__name__)


def next_power_of_two(n: int) -> int:
    """Smallest power of two that is >= n (and >= 1)."""
    return 1 << max(0, int(n - 1).bit_length())


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def auto_grid_size(degree: int, minimum: Optional[int] = None) -> int:
    """Configured grid size, enlarged to a power of two >= 4*(degree + 1)."""
    base = get_config().get("numerics.grid_size") if minimum is None else minimum
    return max(base, next_power_of_two(4 * (degree + 1)))


@dataclass(frozen=True, eq=False)
class BoundaryGrid:
    """M samples of a function at theta_j = 2*pi*j/M, with M a power of two."""

    size: int
    samples: np.ndarray

    def __post_init__(self):
        if not is_power_of_two(self.size):
            raise PreconditionError(f"Grid size must be a power of two, got {self.size}")
        samples = np.array(self.samples, dtype=np.complex128).reshape(-1)
        if samples.size != self.size:
            raise PreconditionError(
                f"Expected {self.size} samples, got {samples.size}",
                {"size": self.size, "samples": int(samples.size)},
            )
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_poly(cls, p: AnalyticPoly, size: int) -> "BoundaryGrid":
        """
        Sample p on the grid with an inverse FFT.

        Args:
            p: Polynomial of degree < size
            size: Number of grid points

        Returns:
            BoundaryGrid holding p(exp(i theta_j))
        """
        if p.degree >= size:
            raise PreconditionError(
                f"Grid of size {size} aliases a polynomial of degree {p.degree}",
                {"size": size, "degree": p.degree},
            )
        return cls(size, size * np.fft.ifft(p.coeffs, size))

    @property
    def thetas(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.size) / self.size

    def to_poly(self, degree: Optional[int] = None) -> AnalyticPoly:
        """Recover Taylor coefficients 0..degree by FFT (all M by default)."""
        coeffs = np.fft.fft(self.samples) / self.size
        if degree is not None:
            coeffs = coeffs[: degree + 1]
        return AnalyticPoly(coeffs)

    def nonnegative_frequencies(self, degree: int) -> np.ndarray:
        """Fourier coefficients 0..degree of the sampled function."""
        return (np.fft.fft(self.samples) / self.size)[: degree + 1]


def sup_norm(p: AnalyticPoly, grid_size: Optional[int] = None) -> float:
    """
    Maximum of |p| over a uniform boundary grid.

    This is a lower bound on the true sup norm that converges as the grid grows.

    Args:
        p: Polynomial
        grid_size: Grid size M; must satisfy M >= 4*(deg p + 1). Chosen
            automatically from the configuration when omitted.

    Returns:
        max_j |p(exp(i theta_j))|
    """
    required = 4 * (p.degree + 1)
    if grid_size is None:
        grid_size = auto_grid_size(p.degree)
    elif grid_size < required:
        raise PreconditionError(
            f"Grid size {grid_size} too small for degree {p.degree}; need at least {required}",
            {"grid_size": grid_size, "degree": p.degree, "required": required},
        )

    value = float(np.max(np.abs(BoundaryGrid.from_poly(p, grid_size).samples)))
    logger.debug("sup norm estimated", degree=p.degree, grid_size=grid_size, value=value)
    return value


def inflated_sup_norm(p: AnalyticPoly, grid_size: Optional[int] = None) -> float:
    """Grid sup norm times (1 + numerics.sup_inflation), for right-hand sides."""
    return sup_norm(p, grid_size) * (1.0 + get_config().get("numerics.sup_inflation"))


def l1_norm(p: AnalyticPoly, rel_tol: Optional[float] = None, max_grid: Optional[int] = None) -> float:
    """
    Trapezoid rule for the integral of |p| over the circle with grid doubling.

    Refinement stops when two successive grids agree within ``rel_tol``; if the
    largest grid is reached first a warning is logged and the last value returned.
    """
    config = get_config()
    rel_tol = config.get("numerics.l1_rel_tol") if rel_tol is None else rel_tol
    max_grid = config.get("numerics.l1_max_grid") if max_grid is None else max_grid

    if p.is_zero():
        return 0.0

    size = max(256, next_power_of_two(4 * (p.degree + 1)))
    previous = 2.0 * np.pi * float(np.mean(np.abs(BoundaryGrid.from_poly(p, size).samples)))

    while size < max_grid:
        size *= 2
        current = 2.0 * np.pi * float(np.mean(np.abs(BoundaryGrid.from_poly(p, size).samples)))
        if abs(current - previous) <= rel_tol * abs(current):
            logger.debug("L1 norm converged", degree=p.degree, grid_size=size, value=current)
            return current
        previous = current

    logger.warning(
        "L1 quadrature did not reach the requested tolerance",
        degree=p.degree,
        grid_size=size,
        rel_tol=rel_tol,
    )
    return previous


def lp_norm(p: AnalyticPoly, exponent: int) -> float:
    """
    L^p norm on the circle for p in {1, 2}.

    Args:
        p: Polynomial
        exponent: 1 (adaptive quadrature) or 2 (Parseval, exact)

    Returns:
        (integral of |p|**exponent dtheta) ** (1/exponent)
    """
    if exponent == 2:
        return float(np.sqrt(p.l2_norm_squared()))
    if exponent == 1:
        return l1_norm(p)
    raise PreconditionError(f"Exponent must be 1 or 2, got {exponent}", {"exponent": exponent})
