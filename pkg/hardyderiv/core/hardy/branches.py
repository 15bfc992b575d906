"""
Analytic Branches

Logarithms and square roots of polynomials without zeros on the closed disc.
The branch is tracked by unwrapping the boundary phase on a uniform grid, and
the resulting boundary function is projected onto Taylor coefficients by FFT.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..circle.grid import BoundaryGrid, auto_grid_size
from ..circle.poly import AnalyticPoly, poly_exp_truncated, poly_multiply
from ..config.central_config import get_config
from ..errors import DomainError, PreconditionError
from ..logging.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BranchResult:
    """A truncated analytic branch together with its boundary residual."""

    poly: AnalyticPoly
    residual: float
    grid_size: int
    min_modulus: float


def closed_disc_zeros(p: AnalyticPoly, slack: float = 1e-9) -> List[complex]:
    """Approximate zeros of p with |z| <= 1 + slack."""
    trimmed = p.trimmed()
    if trimmed.degree == 0:
        return [0j] if trimmed.is_zero() else []
    roots = np.roots(trimmed.coeffs[::-1])
    return sorted((complex(z) for z in roots if abs(z) <= 1.0 + slack), key=abs)


def winding_number(samples: np.ndarray) -> int:
    """Winding number about 0 of a closed curve sampled on a uniform grid."""
    steps = np.angle(np.roll(samples, -1) / samples)
    return int(np.round(np.sum(steps) / (2.0 * np.pi)))


def log_with_residual(p: AnalyticPoly, n_out: int, grid_size: Optional[int] = None) -> BranchResult:
    """
    Principal analytic logarithm of p truncated to degree n_out.

    Args:
        p: Polynomial with no zero on the closed unit disc
        n_out: Degree of the returned truncation
        grid_size: Boundary grid size (automatic when omitted)

    Returns:
        BranchResult whose residual is max |exp(log p) - p| / max |p| on the grid

    Raises:
        DomainError: if p vanishes on the circle or at the origin, or winds around 0
    """
    if n_out < 0:
        raise PreconditionError(f"Truncation degree must be nonnegative, got {n_out}")

    threshold = get_config().get("hardy.zero_threshold")
    size = grid_size or auto_grid_size(max(p.degree, n_out))
    samples = BoundaryGrid.from_poly(p, size).samples
    moduli = np.abs(samples)
    min_modulus = float(np.min(moduli))
    at_origin = p.coefficient(0)

    if min_modulus <= threshold or abs(at_origin) <= threshold:
        zeros = closed_disc_zeros(p)
        raise DomainError(
            "Polynomial vanishes on the closed disc; no analytic logarithm exists",
            zeros=zeros,
            details={"min_modulus": min_modulus, "abs_at_origin": abs(at_origin)},
        )

    winding = winding_number(samples)
    if winding != 0:
        zeros = closed_disc_zeros(p)
        raise DomainError(
            f"Boundary curve winds {winding} times around 0; p has zeros inside the disc",
            zeros=zeros,
            details={"winding": winding},
        )

    phase = np.unwrap(np.angle(samples))
    boundary_log = np.log(moduli) + 1j * phase
    coeffs = (np.fft.fft(boundary_log) / size)[: n_out + 1]
    # principal branch at the origin: Im log p(0) in (-pi, pi]
    coeffs[0] = np.log(complex(at_origin))
    log_poly = AnalyticPoly(coeffs)

    reconstructed = np.exp(BoundaryGrid.from_poly(log_poly, size).samples)
    residual = float(np.max(np.abs(reconstructed - samples)) / np.max(moduli))

    logger.debug(
        "analytic logarithm computed",
        degree=p.degree,
        n_out=n_out,
        grid_size=size,
        residual=residual,
    )
    return BranchResult(log_poly, residual, size, min_modulus)


def analytic_log(p: AnalyticPoly, n_out: int) -> AnalyticPoly:
    """Degree-n_out truncation of the principal branch of log p."""
    return log_with_residual(p, n_out).poly


def sqrt_with_residual(p: AnalyticPoly, n_out: int) -> BranchResult:
    """
    Square root exp(log(p) / 2) truncated to degree n_out.

    The residual is the largest coefficient mismatch of r*r against p through
    degree n_out, relative to the largest coefficient of p.
    """
    log_branch = log_with_residual(p, n_out)
    root = poly_exp_truncated(log_branch.poly * 0.5, n_out)

    squared = poly_multiply(root, root).padded(n_out + 1)[: n_out + 1]
    target = p.padded(n_out + 1)[: n_out + 1]
    scale = max(float(np.max(np.abs(p.coeffs))), 1e-300)
    residual = float(np.max(np.abs(squared - target)) / scale)

    return BranchResult(root, residual, log_branch.grid_size, log_branch.min_modulus)


def analytic_sqrt(p: AnalyticPoly, n_out: int) -> AnalyticPoly:
    """Degree-n_out truncation of the principal square root of p."""
    return sqrt_with_residual(p, n_out).poly
