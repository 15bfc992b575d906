"""
Pietsch Certificates

Explicit control measure mu_D for D_h with

    |D_h(f)(g)| <= ||g||_inf * ||f||_{L^2(mu_D)}   for all f, g,

assembled from the square decomposition h = alpha*z + k1^2 + k2^2:

* alpha-term:   2*pi*|alpha|^2 * arclength
* boundary(k):  16*||k||_2^2 * |k|^2 d(theta)
* interior(k):  16*||k||_2^2 * |k'|^2 dLambda

and mu_D = 5 * (sum of the five), since (a_1 + ... + a_5)^2 <= 5 * sum a_j^2.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..circle.grid import sup_norm
from ..circle.poly import AnalyticPoly, poly_multiply
from ..errors import PreconditionError
from ..hardy.symbols import SquareDecomposition, SymbolH1, random_h2_zero, random_poly, sample_rng
from ..logging.logger import get_logger
from ..measures.disc_measure import DiscMeasure, l2_norm_measure, measure_scale_sum
from ..derivations.form import DerivationForm, bilinear_eval

logger = get_logger(__name__)

COMBINE_FACTOR = 5.0
SQUARE_TERM_CONSTANT = 4.0
VIOLATION_TOLERANCE = 1e-6
COMPONENT_TAGS = ("alpha-term", "boundary(k1)", "interior(k1)", "boundary(k2)", "interior(k2)")


@dataclass(frozen=True)
class CertificateComponent:
    """One of the five scaled measures with its provenance tag."""

    tag: str
    weight: float
    measure: DiscMeasure

    def mass(self) -> float:
        return self.weight * self.measure.total_mass()

    def to_dict(self) -> Dict[str, Any]:
        return {"tag": self.tag, "weight": self.weight, "measure": self.measure.to_dict()}


@dataclass
class VerificationReport:
    """Outcome of sampling the domination inequality."""

    samples: int
    deg: int
    seed: int
    pairs_checked: int = 0
    max_ratio: float = 0.0
    violations: int = 0
    worst_pair: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "samples": self.samples,
            "deg": self.deg,
            "seed": self.seed,
            "pairs_checked": self.pairs_checked,
            "max_ratio": self.max_ratio,
            "violations": self.violations,
            "worst_pair": self.worst_pair,
            "counterexamples": self.counterexamples,
        }


@dataclass
class PietschCertificate:
    """Control measure mu_D for D_h with its construction record."""

    symbol: SymbolH1
    decomposition: SquareDecomposition
    components: List[CertificateComponent]
    mu_D: DiscMeasure
    combine_factor: float
    total_mass: float
    metadata: Dict[str, Any] = field(default_factory=dict)
    verification: Optional[VerificationReport] = None

    def to_dict(self) -> Dict[str, Any]:
        dec = self.decomposition
        return {
            "symbol": self.symbol.to_dict(),
            "alpha": [dec.alpha.real, dec.alpha.imag],
            "c": dec.c,
            "k1_coeffs": dec.k1.to_pairs(),
            "k2_coeffs": dec.k2.to_pairs(),
            "components": [component.to_dict() for component in self.components],
            "combine_factor": self.combine_factor,
            "total_mass": self.total_mass,
            "metadata": self.metadata,
            "verification": self.verification.to_dict() if self.verification else None,
        }


def build_certificate(h: SymbolH1, n_out: Optional[int] = None) -> PietschCertificate:
    """
    Build the control measure of D_h.

    Args:
        h: Symbol
        n_out: Truncation degree of the square decomposition

    Returns:
        PietschCertificate with five tagged components and mu_D = 5 * their sum
    """
    dec = DerivationForm(h, n_out).decomposition
    k_norms = {name: k.l2_norm_squared() for name, k in (("k1", dec.k1), ("k2", dec.k2))}

    components = [CertificateComponent("alpha-term", 2.0 * np.pi * abs(dec.alpha) ** 2, DiscMeasure.arclength())]
    for name, k in (("k1", dec.k1), ("k2", dec.k2)):
        weight = 16.0 * k_norms[name]
        components.append(CertificateComponent(f"boundary({name})", weight, DiscMeasure.boundary(k)))
        components.append(CertificateComponent(f"interior({name})", weight, DiscMeasure.interior(k)))

    inner = measure_scale_sum((component.weight, component.measure) for component in components)
    mu_D = measure_scale_sum([(COMBINE_FACTOR, inner)])
    total_mass = mu_D.total_mass()

    certificate = PietschCertificate(
        symbol=h,
        decomposition=dec,
        components=components,
        mu_D=mu_D,
        combine_factor=COMBINE_FACTOR,
        total_mass=total_mass,
        metadata={
            "norm_factor": float(np.sqrt(COMBINE_FACTOR)),
            "c_rule": dec.c_rule,
            "n_out": dec.n_out,
            "tail_error": dec.tail_error,
            "square_term_constant": SQUARE_TERM_CONSTANT,
        },
    )
    logger.debug("certificate built", degree=h.degree, total_mass=total_mass, c_rule=dec.c_rule)
    return certificate


def closed_form_mass(cert: PietschCertificate) -> float:
    """combine_factor * (4*pi^2*|alpha|^2 + sum_i 16*||k_i||_2^2 * (mass mu_B(k_i) + mass mu_I(k_i)))."""
    dec = cert.decomposition
    total = 4.0 * np.pi ** 2 * abs(dec.alpha) ** 2
    for k in (dec.k1, dec.k2):
        norm_sq = k.l2_norm_squared()
        # both masses equal ||k||_2^2 when k(0) = 0
        total += 16.0 * norm_sq * (2.0 * norm_sq)
    return cert.combine_factor * total


def _describe_pair(f: AnalyticPoly, g: AnalyticPoly, lhs: float, rhs: float) -> Dict[str, Any]:
    return {"f": f.to_pairs(), "g": g.to_pairs(), "lhs": lhs, "rhs": rhs}


def _sampled_pairs(samples: int, deg: int, seed: int):
    for j in range(1, deg + 1):
        for k in range(deg + 1):
            yield AnalyticPoly.monomial(j), AnalyticPoly.monomial(k)
    for i in range(samples):
        rng = sample_rng(seed, i)
        f = random_poly(rng, deg)
        g = random_poly(rng, deg)
        yield f, g / sup_norm(g)


def verify_certificate(cert: PietschCertificate, samples: int, deg: int, seed: int) -> VerificationReport:
    """
    Sample |D(f)(g)| <= ||f||_{L^2(mu_D)} over f and g with ||g||_inf <= 1.

    The sample set is the monomial pairs (z^j, z^k), 1 <= j <= deg,
    0 <= k <= deg, then ``samples`` random pairs from the (seed, i) streams
    with g rescaled to unit grid sup norm. 0/0 counts as a pass.

    Args:
        cert: Certificate to check
        samples: Number of random pairs (>= 1)
        deg: Degree of the sampled polynomials
        seed: Base seed

    Returns:
        VerificationReport, also attached to the certificate
    """
    if samples < 1:
        raise PreconditionError(f"Sample count must be at least 1, got {samples}")

    D = DerivationForm(cert.symbol)
    report = VerificationReport(samples=samples, deg=deg, seed=seed)

    for f, g in _sampled_pairs(samples, deg, seed):
        lhs = abs(bilinear_eval(D, f, g))
        rhs = l2_norm_measure(f, cert.mu_D)
        report.pairs_checked += 1

        if lhs == 0.0:
            continue
        ratio = lhs / rhs if rhs > 0.0 else float("inf")
        if ratio > report.max_ratio:
            report.max_ratio = ratio
            report.worst_pair = _describe_pair(f, g, lhs, rhs)
        if lhs > rhs * (1.0 + VIOLATION_TOLERANCE):
            report.violations += 1
            if len(report.counterexamples) < 5:
                report.counterexamples.append(_describe_pair(f, g, lhs, rhs))

    if report.violations:
        logger.error(
            "control measure refuted",
            violations=report.violations,
            max_ratio=report.max_ratio,
            degree=cert.symbol.degree,
        )
    else:
        logger.info("control measure verified", pairs=report.pairs_checked, max_ratio=report.max_ratio)

    cert.verification = report
    return report


def combining_inequality_check(values: Sequence[float]) -> bool:
    """(sum a_j)^2 <= m * sum a_j^2 for nonnegative a_1..a_m."""
    a = np.asarray(list(values), dtype=float)
    if a.size == 0:
        return True
    if np.any(a < 0):
        raise PreconditionError("Values must be nonnegative", {"values": a.tolist()})
    return bool(np.sum(a) ** 2 <= a.size * np.sum(a ** 2) * (1.0 + 1e-12))


def alpha_term_ratio(f: AnalyticPoly) -> float:
    """2*pi*|f_1| over (2*pi * ||f||_2^2)^(1/2); at most 1 by Parseval."""
    rhs = np.sqrt(2.0 * np.pi * f.l2_norm_squared())
    if rhs == 0.0:
        return 0.0
    return float(2.0 * np.pi * abs(f.coefficient(1)) / rhs)


def square_term_ratio(k: AnalyticPoly, f: AnalyticPoly, g: AnalyticPoly) -> float:
    """
    |D_{k^2}(f)(g)| over 4 * ||g||_inf * ||k||_2 * (||f||_{L^2(mu_B(k))} + ||f||_{L^2(mu_I(k))}).

    At most 1 for k vanishing at the origin.
    """
    lhs = abs(bilinear_eval(DerivationForm(SymbolH1(poly_multiply(k, k))), f, g))
    if lhs == 0.0:
        return 0.0
    spread = l2_norm_measure(f, DiscMeasure.boundary(k)) + l2_norm_measure(f, DiscMeasure.interior(k))
    rhs = SQUARE_TERM_CONSTANT * sup_norm(g) * np.sqrt(k.l2_norm_squared()) * spread
    return float(lhs / rhs) if rhs > 0.0 else float("inf")


def per_term_dominations(
    cert: PietschCertificate,
    samples: int,
    deg: int,
    seed: int,
) -> Dict[str, Any]:
    """
    Check the two per-term inequalities the certificate is assembled from.

    The alpha-term bound is checked on every sampled f; the square-term bound
    on every sampled (f, g) against k1, k2 of the certificate and one random
    H^2_0 factor per sample.

    Returns:
        Dictionary with the largest ratio of each kind and the violation count
    """
    dec = cert.decomposition
    fixed_ks = [k for k in (dec.k1, dec.k2) if not k.is_zero()]
    alpha_max = 0.0
    square_max = 0.0
    violations = 0
    limit = 1.0 + VIOLATION_TOLERANCE

    for i in range(samples):
        rng = sample_rng(seed, i)
        f = random_poly(rng, deg)
        g = random_poly(rng, deg)
        g = g / sup_norm(g)
        k_random = random_h2_zero(rng, max(deg, 1))

        alpha = alpha_term_ratio(f)
        alpha_max = max(alpha_max, alpha)
        violations += int(alpha > limit)

        for k in (*fixed_ks, k_random):
            ratio = square_term_ratio(k, f, g)
            square_max = max(square_max, ratio)
            violations += int(ratio > limit)

    return {
        "samples": samples,
        "deg": deg,
        "seed": seed,
        "alpha_term_max_ratio": alpha_max,
        "square_term_max_ratio": square_max,
        "violations": violations,
    }
