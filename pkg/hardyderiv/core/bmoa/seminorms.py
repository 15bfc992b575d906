"""
BMOA Seminorm Estimators

Lower-bound estimators for the three equivalent BMOA seminorms of an
analytic polynomial f:

* osc      - sup over arcs I of (1/|I|) integral_I |f - f_I|
* dual     - sup over h in H^1_0 of |integral f conj(h)| / ||h||_1
* carleson - sup over k of (integral_D |f' k|^2 (1-|z|)^2 dA / ||k||_2^2)^(1/2)

Each supremum is taken over a finite family, so every estimate is a lower
bound for the corresponding seminorm.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..circle.grid import inflated_sup_norm, lp_norm, next_power_of_two
from ..circle.poly import AnalyticPoly, derivative, poly_multiply, u_of
from ..config.central_config import get_config
from ..errors import PreconditionError
from ..hardy.symbols import SymbolH1, fejer_truncate, random_poly, random_symbol, sample_rng
from ..logging.logger import get_logger
from ..measures.quadrature import carleson_radial_rule, gauss_legendre_unit

logger = get_logger(__name__)

OSC_PANELS = 16
OSC_POINTS = 16
MULTIPLICATIVITY_SLACK = 1e-9


class SeminormKind(Enum):
    """The three BMOA characterisations."""
    OSC = "osc"
    DUAL = "dual"
    CARLESON = "carleson"


@dataclass
class SeminormEstimate:
    """Lower bound for one seminorm with the test element that achieved it."""

    value: float
    kind: SeminormKind
    witness: Dict[str, Any] = field(default_factory=dict)
    test_family_size: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "value": self.value,
            "witness": self.witness,
            "test_family_size": self.test_family_size,
        }


def _composite_unit_rule() -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on [0, 1] with equal panels."""
    x, w = gauss_legendre_unit(OSC_POINTS)
    offsets = np.arange(OSC_PANELS)[:, None]
    nodes = ((offsets + x[None, :]) / OSC_PANELS).ravel()
    weights = np.tile(w / OSC_PANELS, OSC_PANELS)
    return nodes, weights


def _arc_means(f: AnalyticPoly, starts: np.ndarray, length: float) -> np.ndarray:
    """Exact means of f - f(0) over the arcs [a, a + length]."""
    n = np.arange(1, f.coeffs.size)
    if n.size == 0:
        return np.zeros(starts.size, dtype=np.complex128)
    phase = np.exp(1j * np.outer(starts, n))
    integrals = phase * (np.exp(1j * n * length) - 1.0) / (1j * n)
    return integrals @ f.coeffs[1:] / length


def osc_seminorm(f: AnalyticPoly, depth: Optional[int] = None) -> SeminormEstimate:
    """
    Largest mean oscillation over dyadic arcs and their half-step rotations.

    Generation 0 is the whole circle; generation g uses arcs of length
    2*pi/2^g starting at multiples of half that length.

    Args:
        f: Polynomial
        depth: Finest generation (>= 1); ``bmoa.osc_depth`` by default

    Returns:
        SeminormEstimate with the maximizing arc as witness
    """
    depth = get_config().get("bmoa.osc_depth") if depth is None else depth
    if depth < 1:
        raise PreconditionError(f"Arc depth must be at least 1, got {depth}")

    centred = f - f.coefficient(0)
    t, w = _composite_unit_rule()
    best = SeminormEstimate(0.0, SeminormKind.OSC, {"generation": 0, "start": 0.0, "length": 2.0 * np.pi})
    arcs = 0

    for generation in range(depth + 1):
        length = 2.0 * np.pi / 2 ** generation
        count = 1 if generation == 0 else 2 ** (generation + 1)
        starts = np.arange(count) * (length / 2.0)
        means = _arc_means(centred, starts, length)
        z = np.exp(1j * (starts[:, None] + length * t[None, :]))
        values = np.abs(centred(z) - means[:, None]) @ w
        arcs += count

        index = int(np.argmax(values))
        if values[index] > best.value:
            best = SeminormEstimate(
                float(values[index]),
                SeminormKind.OSC,
                {"generation": generation, "start": float(starts[index]), "length": length},
            )

    best.test_family_size = arcs
    return best


def dual_seminorm(f: AnalyticPoly, test_h: Sequence[SymbolH1]) -> SeminormEstimate:
    """
    Largest normalized pairing |2*pi * sum f_n conj(h_n)| / ||h||_1 over the family.

    Zero test symbols are skipped with a warning.
    """
    if not test_h:
        raise PreconditionError("Dual seminorm needs a nonempty test family")

    best = SeminormEstimate(0.0, SeminormKind.DUAL, {})
    used = 0
    for index, h in enumerate(test_h):
        if h.is_zero():
            logger.warning("zero test symbol skipped", index=index)
            continue
        used += 1
        top = min(f.coeffs.size, h.poly.coeffs.size)
        pairing = 2.0 * np.pi * np.sum(f.coeffs[1:top] * np.conj(h.poly.coeffs[1:top])) if top > 1 else 0.0
        value = float(abs(pairing) / lp_norm(h.poly, 1))
        if value > best.value or not best.witness:
            best = SeminormEstimate(value, SeminormKind.DUAL, {"index": index, "degree": h.degree})

    best.test_family_size = used
    return best


def carleson_sizes(f: AnalyticPoly, test_k: Sequence[AnalyticPoly]) -> Tuple[int, int]:
    """Smallest exact quadrature sizes (Nr, Ntheta) for the family."""
    degree = max((derivative(f).degree + k.degree for k in test_k), default=0)
    return degree + 1, next_power_of_two(2 * degree + 2)


def carleson_ratio(f: AnalyticPoly, k: AnalyticPoly, nr: int, ntheta: int) -> float:
    """
    integral_D |f' k|^2 (1-|z|)^2 dA / ||k||_2^2 by tensor quadrature.

    Args:
        f: Polynomial
        k: Nonzero test polynomial
        nr: Radial Gauss-Jacobi nodes, at least deg(f'k) + 1
        ntheta: Angular nodes, at least 2*deg(f'k) + 1
    """
    q = poly_multiply(derivative(f), k)
    if nr < q.degree + 1 or ntheta < 2 * q.degree + 1:
        raise PreconditionError(
            f"Quadrature sizes ({nr}, {ntheta}) too small for degree {q.degree}",
            {"nr": nr, "ntheta": ntheta, "degree": q.degree},
        )
    if q.is_zero():
        return 0.0
    r, w = carleson_radial_rule(nr)
    theta = 2.0 * np.pi * np.arange(ntheta) / ntheta
    z = r[:, None] * np.exp(1j * theta)[None, :]
    area = float(np.sum(w[:, None] * np.abs(q(z)) ** 2) * 2.0 * np.pi / ntheta)
    return area / k.l2_norm_squared()


def carleson_seminorm(
    f: AnalyticPoly,
    test_k: Sequence[AnalyticPoly],
    nr: Optional[int] = None,
    ntheta: Optional[int] = None,
) -> SeminormEstimate:
    """
    Square root of the largest Carleson quotient over the family.

    Quadrature sizes default to the smallest exact ones; explicit sizes that
    are too small for the polynomial degrees are refused.
    """
    if not test_k:
        raise PreconditionError("Carleson seminorm needs a nonempty test family")

    auto_nr, auto_ntheta = carleson_sizes(f, test_k)
    nr = auto_nr if nr is None else nr
    ntheta = auto_ntheta if ntheta is None else ntheta

    best_ratio = 0.0
    witness: Dict[str, Any] = {}
    used = 0
    for index, k in enumerate(test_k):
        if k.is_zero():
            logger.warning("zero test function skipped", index=index)
            continue
        used += 1
        ratio = carleson_ratio(f, k, nr, ntheta)
        if ratio > best_ratio or not witness:
            best_ratio = ratio
            witness = {"index": index, "degree": k.degree}

    return SeminormEstimate(float(np.sqrt(best_ratio)), SeminormKind.CARLESON, witness, used)


def carleson_multiplicativity_check(f: AnalyticPoly, g: AnalyticPoly, test_k: Sequence[AnalyticPoly]) -> bool:
    """
    ratio(u, k) <= sup|g|^2 * ratio(f, k) for u = u_of(f, g) and every k.

    Holds pointwise since u' = f'g; the grid sup of g is inflated slightly.
    """
    u = u_of(f, g)
    sup_sq = inflated_sup_norm(g) ** 2
    family = [k for k in test_k if not k.is_zero()]
    if not family:
        return True
    nr, ntheta = carleson_sizes(u, family)

    for index, k in enumerate(family):
        lhs = carleson_ratio(u, k, nr, ntheta)
        rhs = sup_sq * carleson_ratio(f, k, nr, ntheta)
        if lhs > rhs * (1.0 + MULTIPLICATIVITY_SLACK):
            logger.warning("multiplicativity bound failed", index=index, lhs=lhs, rhs=rhs)
            return False
    return True


def default_dual_family(seed: int, size: Optional[int] = None) -> List[SymbolH1]:
    """Fejer-smoothed random symbols of degree ``sampling.degree``."""
    config = get_config()
    size = config.get("bmoa.dual_family_size") if size is None else size
    degree = config.get("sampling.degree")
    return [fejer_truncate(random_symbol(degree, seed, index=i), degree) for i in range(size)]


def default_carleson_family(seed: int, size: Optional[int] = None) -> List[AnalyticPoly]:
    """Monomials 1, z, ..., z^8 followed by random polynomials of degree ``sampling.degree``."""
    config = get_config()
    size = config.get("bmoa.carleson_random_family") if size is None else size
    degree = config.get("sampling.degree")
    family = [AnalyticPoly.monomial(n) for n in range(9)]
    family.extend(random_poly(sample_rng(seed, i), degree) for i in range(size))
    return family


def bmoa_estimates(f: AnalyticPoly, seed: int) -> List[SeminormEstimate]:
    """All three estimates with the default families, in osc, dual, carleson order."""
    return [
        osc_seminorm(f),
        dual_seminorm(f, default_dual_family(seed)),
        carleson_seminorm(f, default_carleson_family(seed)),
    ]


def equivalence_ratio_report(seed: int, battery_size: int = 20, degree: Optional[int] = None) -> Dict[str, Any]:
    """
    Pairwise ratios of the three estimates over a fixed battery of polynomials.

    Only positivity and finiteness of the ratios are asserted; the intervals
    are reported.
    """
    degree = get_config().get("sampling.degree") if degree is None else degree
    dual_family = default_dual_family(seed)
    carleson_family = default_carleson_family(seed)

    pairs = {"osc/dual": [], "osc/carleson": [], "dual/carleson": []}
    for i in range(battery_size):
        f = random_poly(sample_rng(seed, 1000 + i), degree)
        osc = osc_seminorm(f).value
        dual = dual_seminorm(f, dual_family).value
        carleson = carleson_seminorm(f, carleson_family).value
        pairs["osc/dual"].append(osc / dual if dual > 0 else float("inf"))
        pairs["osc/carleson"].append(osc / carleson if carleson > 0 else float("inf"))
        pairs["dual/carleson"].append(dual / carleson if carleson > 0 else float("inf"))

    intervals = {name: [float(min(values)), float(max(values))] for name, values in pairs.items()}
    positive_finite = all(np.isfinite(v) and v > 0 for values in pairs.values() for v in values)
    if not positive_finite:
        logger.warning("equivalence ratios degenerate", intervals=intervals)
    return {
        "battery_size": battery_size,
        "degree": degree,
        "seed": seed,
        "intervals": intervals,
        "positive_finite": positive_finite,
    }
