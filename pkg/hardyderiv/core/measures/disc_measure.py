"""
Disc Measures

Finite positive measures on the closed disc built from three density
families:

* arclength  - the arc length measure on the circle (mass 2*pi);
* boundary   - |k|^2 d(theta) on the circle;
* interior   - |k'|^2 dLambda on the open disc, dLambda = 4 log(1/|z|) dA.

Densities are carried as polynomials, so masses and L^2 norms of
polynomials have closed forms through Parseval and the moments of Lambda.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..circle.grid import BoundaryGrid, next_power_of_two
from ..circle.poly import AnalyticPoly, derivative, poly_multiply
from ..errors import InputError, PreconditionError
from ..logging.logger import get_logger
from .quadrature import log_weight_rule

logger = get_logger(__name__)


class MeasureKind(Enum):
    """Density families of a disc measure component."""
    ARCLENGTH = "arclength"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class MeasureComponent:
    """weight * (density of the given kind), with density polynomial k where needed."""

    kind: MeasureKind
    weight: float
    k: AnalyticPoly = field(default_factory=AnalyticPoly.zero)

    def __post_init__(self):
        if not np.isfinite(self.weight) or self.weight < 0:
            raise PreconditionError(f"Component weight must be a nonnegative number, got {self.weight}")

    def unit_mass(self) -> float:
        """Mass of the unweighted density."""
        if self.kind is MeasureKind.ARCLENGTH:
            return 2.0 * np.pi
        if self.kind is MeasureKind.BOUNDARY:
            return self.k.l2_norm_squared()
        # |k'|^2 against Lambda has mass 2*pi * sum_{n>=1} |k_n|^2
        return float(2.0 * np.pi * np.sum(np.abs(self.k.coeffs[1:]) ** 2))

    def mass(self) -> float:
        return self.weight * self.unit_mass()

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "weight": self.weight, "k_coeffs": self.k.to_pairs()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MeasureComponent":
        try:
            kind = MeasureKind(data["kind"])
            weight = float(data["weight"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Invalid measure component: {e}")
        k = AnalyticPoly.from_pairs(data.get("k_coeffs") or [[0.0, 0.0]])
        return cls(kind, weight, k)


@dataclass(frozen=True)
class DiscMeasure:
    """Weighted sum of measure components, in a fixed order."""

    components: Tuple[MeasureComponent, ...] = ()

    @classmethod
    def zero(cls) -> "DiscMeasure":
        return cls(())

    @classmethod
    def arclength(cls, weight: float = 1.0) -> "DiscMeasure":
        return cls((MeasureComponent(MeasureKind.ARCLENGTH, weight),))

    @classmethod
    def boundary(cls, k: AnalyticPoly, weight: float = 1.0) -> "DiscMeasure":
        return cls((MeasureComponent(MeasureKind.BOUNDARY, weight, k),))

    @classmethod
    def interior(cls, k: AnalyticPoly, weight: float = 1.0) -> "DiscMeasure":
        return cls((MeasureComponent(MeasureKind.INTERIOR, weight, k),))

    def total_mass(self) -> float:
        # fixed summation order
        return float(sum(component.mass() for component in self.components))

    def is_zero(self) -> bool:
        return all(component.mass() == 0.0 for component in self.components)

    def scaled(self, weight: float) -> "DiscMeasure":
        return measure_scale_sum([(weight, self)])

    def to_dict(self) -> Dict[str, Any]:
        return {"components": [component.to_dict() for component in self.components]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiscMeasure":
        return cls(tuple(MeasureComponent.from_dict(item) for item in data.get("components", [])))


def lambda_moment(n: int) -> float:
    """
    integral over the disc of |z|^(2n) dLambda.

    Args:
        n: Moment index (>= 0)

    Returns:
        2*pi / (n + 1)^2
    """
    if n < 0:
        raise PreconditionError(f"Moment index must be nonnegative, got {n}")
    return 2.0 * np.pi / (n + 1) ** 2


def lambda_moments(count: int) -> np.ndarray:
    """Moments 0..count-1 as an array."""
    return 2.0 * np.pi / (np.arange(count) + 1.0) ** 2


def lambda_norm_squared(p: AnalyticPoly) -> float:
    """||p||_Lambda^2 = sum |p_n|^2 * lambda_moment(n)."""
    return float(np.sum(np.abs(p.coeffs) ** 2 * lambda_moments(p.coeffs.size)))


def lambda_inner_closed(u: AnalyticPoly, v: AnalyticPoly) -> complex:
    """
    <u', v'>_Lambda in closed form.

    Equals the boundary pairing of u - u(0) with v - v(0), that is
    2*pi * sum_{n>=1} u_n * conj(v_n).
    """
    top = min(u.coeffs.size, v.coeffs.size)
    if top <= 1:
        return 0j
    return complex(2.0 * np.pi * np.sum(u.coeffs[1:top] * np.conj(v.coeffs[1:top])))


def _disc_points(nr: int, ntheta: int) -> Tuple[np.ndarray, np.ndarray]:
    """Tensor nodes z_ij and weights for integral F dLambda."""
    rho, w = log_weight_rule(nr)
    theta = 2.0 * np.pi * np.arange(ntheta) / ntheta
    z = np.sqrt(rho)[:, None] * np.exp(1j * theta)[None, :]
    weights = np.repeat((w * 2.0 * np.pi / ntheta)[:, None], ntheta, axis=1)
    return z, weights


def lambda_inner_quad(u: AnalyticPoly, v: AnalyticPoly, nr: int, ntheta: int) -> complex:
    """
    <u', v'>_Lambda by area quadrature.

    Uses a uniform angular grid and the Gauss rule for log(1/rho) in
    rho = |z|^2, which is exact for these integrands once the sizes pass
    the precondition.

    Args:
        u: First polynomial
        v: Second polynomial
        nr: Radial nodes, at least 4*(deg u + deg v + 1)
        ntheta: Angular nodes, at least 4*(deg u + deg v + 1)

    Returns:
        integral of u' * conj(v') dLambda
    """
    required = 4 * (u.degree + v.degree + 1)
    if nr < required or ntheta < required:
        raise PreconditionError(
            f"Quadrature sizes ({nr}, {ntheta}) too small; need at least {required}",
            {"nr": nr, "ntheta": ntheta, "required": required},
        )
    z, weights = _disc_points(nr, ntheta)
    du = derivative(u)(z)
    dv = derivative(v)(z)
    return complex(np.sum(weights * du * np.conj(dv)))


def component_norm_squared(f: AnalyticPoly, component: MeasureComponent) -> float:
    """Unweighted integral of |f|^2 against one density."""
    if component.kind is MeasureKind.ARCLENGTH:
        return f.l2_norm_squared()
    if component.kind is MeasureKind.BOUNDARY:
        return poly_multiply(f, component.k).l2_norm_squared()
    return lambda_norm_squared(poly_multiply(f, derivative(component.k)))


def _component_norm_squared_quad(f: AnalyticPoly, component: MeasureComponent) -> float:
    if component.kind is MeasureKind.INTERIOR:
        q = poly_multiply(f, derivative(component.k))
        z, weights = _disc_points(q.degree + 1, next_power_of_two(2 * q.degree + 2))
        return float(np.sum(weights * np.abs(q(z)) ** 2))
    q = f if component.kind is MeasureKind.ARCLENGTH else poly_multiply(f, component.k)
    size = next_power_of_two(2 * q.degree + 2)
    samples = BoundaryGrid.from_poly(q, size).samples
    return float(2.0 * np.pi * np.mean(np.abs(samples) ** 2))


def l2_norm_measure(f: AnalyticPoly, mu: DiscMeasure, method: str = "closed") -> float:
    """
    ||f||_{L^2(mu)}.

    Args:
        f: Polynomial
        mu: Disc measure
        method: "closed" (Parseval and Lambda moments) or "quadrature"
            (boundary grids and the log-weight area rule), for cross-checks

    Returns:
        (sum_i weight_i * integral |f|^2 d(density_i))^(1/2)
    """
    if method == "closed":
        evaluate = component_norm_squared
    elif method == "quadrature":
        evaluate = _component_norm_squared_quad
    else:
        raise PreconditionError(f"Unknown method '{method}'")

    total = 0.0
    for component in mu.components:
        if component.weight == 0.0:
            continue
        total += component.weight * evaluate(f, component)
    return float(np.sqrt(max(total, 0.0)))


def measure_scale_sum(terms: Iterable[Tuple[float, DiscMeasure]]) -> DiscMeasure:
    """
    sum_i weight_i * mu_i as one flattened component list.

    Raises:
        PreconditionError: on a negative weight
    """
    components: List[MeasureComponent] = []
    for weight, measure in terms:
        if weight < 0:
            raise PreconditionError(f"Measure weights must be nonnegative, got {weight}", {"weight": weight})
        for component in measure.components:
            components.append(MeasureComponent(component.kind, weight * component.weight, component.k))
    return DiscMeasure(tuple(components))


def measure_mass_quadrature(mu: DiscMeasure, nr: Optional[int] = None) -> float:
    """
    Total mass by quadrature instead of the closed forms.

    Boundary densities are integrated on uniform grids and interior ones
    with the log-weight area rule.
    """
    total = 0.0
    for component in mu.components:
        if component.kind is MeasureKind.INTERIOR:
            dk = derivative(component.k)
            z, weights = _disc_points(nr or dk.degree + 1, next_power_of_two(2 * dk.degree + 2))
            unit = float(np.sum(weights * np.abs(dk(z)) ** 2))
        else:
            unit = _component_norm_squared_quad(AnalyticPoly.one(), component)
        total += component.weight * unit
    logger.debug("measure mass by quadrature", components=len(mu.components), mass=total)
    return total
