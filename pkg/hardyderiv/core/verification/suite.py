"""
Acceptance Suite

Property checks over deterministic random batteries. Every check draws
from its own block of (seed, index) streams so that checks are independent
of each other and of the order they run in.
"""

from typing import Any, Dict, List

import numpy as np

from ..bmoa.seminorms import (
    carleson_multiplicativity_check,
    carleson_seminorm,
    default_carleson_family,
    default_dual_family,
    dual_seminorm,
    osc_seminorm,
)
from ..circle.grid import lp_norm, sup_norm
from ..circle.poly import AnalyticPoly
from ..derivations.form import (
    DerivationForm,
    b_factorization_residual,
    bilinear_eval,
    exp_trick_residual,
    extract_symbol,
    leibniz_residual,
    unit_vanishing_residual,
)
from ..derivations.gram import gram_matrix, rank_and_singular_values
from ..derivations.norms import fejer_tail_bound, norm_lower_bound_mc, norm_upper_bound
from ..hardy.symbols import SymbolH1, decompose_squares, random_poly, random_symbol, sample_rng
from ..measures.disc_measure import lambda_inner_closed, lambda_inner_quad, lambda_moment, lambda_norm_squared
from ..measures.quadrature import lambda_moment_quad
from ..pietsch.certificate import build_certificate, per_term_dominations, verify_certificate
from ..storage.base_storage import dumps_json
from .check import Check, CheckOutcome

# first stream index of each battery
LP_STREAMS = 10_000
ROUND_TRIP_STREAMS = 20_000
FACTORIZATION_STREAMS = 30_000
LEIBNIZ_STREAMS = 40_000
EXP_STREAMS = 50_000
SQUARE_STREAMS = 60_000
PIETSCH_STREAMS = 70_000
RANK_STREAMS = 80_000
TAIL_STREAMS = 90_000
SANDWICH_STREAMS = 100_000
BMOA_STREAMS = 110_000

SANDWICH_SLACK = 1e-6


def _scale(*values: complex) -> float:
    return 1.0 + max(abs(v) for v in values)


def lp_identity(seed: int, pairs: int = 100, max_degree: int = 32, tolerance: float = 1e-8) -> CheckOutcome:
    """Closed-form and quadrature Lambda inner products of derivatives agree."""
    size = 4 * (2 * max_degree + 1)
    worst = 0.0
    worst_index = -1
    for i in range(pairs):
        rng = sample_rng(seed, LP_STREAMS + i)
        u = random_poly(rng, 1 + i % max_degree)
        v = random_poly(rng, 1 + (7 * i + 3) % max_degree)
        closed = lambda_inner_closed(u, v)
        quad = lambda_inner_quad(u, v, size, size)
        scale = np.sqrt(lambda_inner_closed(u, u).real * lambda_inner_closed(v, v).real)
        error = abs(quad - closed) / scale
        if error > worst:
            worst, worst_index = error, i
    return CheckOutcome(worst <= tolerance, worst, {"pairs": pairs, "size": size, "worst_index": worst_index})


def moment_law(max_n: int = 32, nr: int = 33, tolerance: float = 1e-10) -> CheckOutcome:
    """Moments of Lambda against the log-weight quadrature."""
    errors = [abs(lambda_moment_quad(n, nr) - lambda_moment(n)) / lambda_moment(n) for n in range(max_n + 1)]
    worst = max(errors)
    return CheckOutcome(worst <= tolerance, worst, {"worst_n": int(np.argmax(errors)), "nr": nr})


def symbol_round_trip(seed: int, count: int = 50, max_degree: int = 24, tolerance: float = 1e-12) -> CheckOutcome:
    """extract_symbol recovers h from the bilinear form D_h."""
    worst = 0.0
    for i in range(count):
        degree = 1 + i % max_degree
        h = random_symbol(degree, seed, ROUND_TRIP_STREAMS + i, decay=1.0)
        D = DerivationForm(h)
        recovered = extract_symbol(D, degree)
        diff = np.abs(recovered.poly.padded(degree + 1) - h.poly.padded(degree + 1))
        worst = max(worst, float(np.max(diff)))
    return CheckOutcome(worst <= tolerance, worst, {"count": count})


def b_factorization(seed: int, count: int = 200, degree: int = 12, tolerance: float = 1e-12) -> CheckOutcome:
    """D(f)(g) = B(D)(u) for the antiderivative u of f'g, and D(1) = 0."""
    worst = 0.0
    unit_worst = 0.0
    for i in range(count):
        rng = sample_rng(seed, FACTORIZATION_STREAMS + i)
        D = DerivationForm(random_symbol(degree, seed, FACTORIZATION_STREAMS + i))
        f = random_poly(rng, degree)
        g = random_poly(rng, degree)
        residual = b_factorization_residual(D, f, g) / _scale(bilinear_eval(D, f, g))
        worst = max(worst, residual)
        unit_worst = max(unit_worst, unit_vanishing_residual(D, g))
    passed = worst <= tolerance and unit_worst <= tolerance
    return CheckOutcome(passed, max(worst, unit_worst), {"count": count, "unit_residual": unit_worst})


def leibniz(seed: int, count: int = 100, max_degree: int = 6, tolerance: float = 1e-10) -> CheckOutcome:
    """D(fg)(k) = D(f)(gk) + D(g)(fk)."""
    worst = 0.0
    for i in range(count):
        rng = sample_rng(seed, LEIBNIZ_STREAMS + i)
        D = DerivationForm(random_symbol(12, seed, LEIBNIZ_STREAMS + i))
        f, g, k = (random_poly(rng, 1 + (i + j) % max_degree) for j in range(3))
        scale = _scale(
            bilinear_eval(D, f * g, k),
            bilinear_eval(D, f, g * k),
            bilinear_eval(D, g, f * k),
        )
        worst = max(worst, leibniz_residual(D, f, g, k) / scale)
    return CheckOutcome(worst <= tolerance, worst, {"count": count})


def exp_trick(seed: int, count: int = 20, degree: int = 4, n_exp: int = 40, tolerance: float = 1e-8) -> CheckOutcome:
    """D(e^a)(g) = D(a)(e^a g) for exponents of unit sup norm."""
    worst = 0.0
    for i in range(count):
        rng = sample_rng(seed, EXP_STREAMS + i)
        D = DerivationForm(random_symbol(8, seed, EXP_STREAMS + i))
        a = random_poly(rng, degree)
        a = a / sup_norm(a)
        g = random_poly(rng, degree)
        residual = exp_trick_residual(D, a, g, n_exp)
        worst = max(worst, residual / _scale(bilinear_eval(D, a, g)))
    return CheckOutcome(worst <= tolerance, worst, {"count": count, "n_exp": n_exp})


def square_decomposition(
    seed: int,
    count: int = 50,
    max_degree: int = 12,
    n_out: int = 64,
    tolerance: float = 1e-8,
) -> CheckOutcome:
    """||alpha z + k1^2 + k2^2 - h||_2 / ||h||_2 stays below tolerance."""
    worst = 0.0
    rules: Dict[str, int] = {}
    for i in range(count):
        h = random_symbol(1 + i % max_degree, seed, SQUARE_STREAMS + i)
        dec = decompose_squares(h, n_out)
        worst = max(worst, dec.tail_error / np.sqrt(h.poly.l2_norm_squared()))
        rules[dec.c_rule] = rules.get(dec.c_rule, 0) + 1
    return CheckOutcome(worst <= tolerance, worst, {"count": count, "n_out": n_out, "c_rules": rules})


def pietsch_certificates(seed: int, count: int = 20, samples: int = 500, degree: int = 12) -> CheckOutcome:
    """
    Control measures dominate |D(f)(g)| on every sampled pair.

    The first two symbols are also checked at scales 1/4 and 4.
    """
    max_ratio = 0.0
    violations = 0
    for i in range(count):
        h = random_symbol(1 + i % degree, seed, PIETSCH_STREAMS + i)
        scales = (0.25, 1.0, 4.0) if i < 2 else (1.0,)
        for t in scales:
            report = verify_certificate(build_certificate(h * t), samples, degree, seed + i)
            max_ratio = max(max_ratio, report.max_ratio)
            violations += report.violations
    return CheckOutcome(violations == 0, max_ratio, {"count": count, "samples": samples, "violations": violations})


def per_term(seed: int, count: int = 5, samples: int = 100, degree: int = 12) -> CheckOutcome:
    """The alpha-term and square-term inequalities behind the certificate."""
    alpha_max = 0.0
    square_max = 0.0
    violations = 0
    for i in range(count):
        cert = build_certificate(random_symbol(degree, seed, PIETSCH_STREAMS + i))
        result = per_term_dominations(cert, samples, degree, seed + i)
        alpha_max = max(alpha_max, result["alpha_term_max_ratio"])
        square_max = max(square_max, result["square_term_max_ratio"])
        violations += result["violations"]
    details = {"alpha_term_max_ratio": alpha_max, "square_term_max_ratio": square_max, "violations": violations}
    return CheckOutcome(violations == 0, max(alpha_max, square_max), details)


def finite_rank(seed: int, max_n: int = 8, order: int = 12, pairs: int = 50, tolerance: float = 1e-12) -> CheckOutcome:
    """D_{z^n} has Gram rank n and kills z^(n+2) * A."""
    ranks: List[int] = []
    worst = 0.0
    for n in range(1, max_n + 1):
        D = DerivationForm(SymbolH1.monomial(n))
        rank, _ = rank_and_singular_values(gram_matrix(D, order), 1e-10)
        ranks.append(rank)
        for i in range(pairs):
            rng = sample_rng(seed, RANK_STREAMS + 100 * n + i)
            p = random_poly(rng, 6)
            q = random_poly(rng, 6)
            worst = max(worst, abs(bilinear_eval(D, p.shifted(n + 2), q)))
    passed = ranks == list(range(1, max_n + 1)) and worst <= tolerance
    return CheckOutcome(passed, worst, {"ranks": ranks, "order": order})


def compactness_trend(seed: int, count: int = 20, max_degree: int = 12, order: int = 24) -> CheckOutcome:
    """
    Tail bounds are non-increasing and vanish at N = deg h.

    The singular value decay of a geometric symbol is reported only.
    """
    worst_increase = 0.0
    worst_final = 0.0
    for i in range(count):
        degree = 1 + i % max_degree
        D = DerivationForm(random_symbol(degree, seed, TAIL_STREAMS + i))
        tails = [fejer_tail_bound(D, N) for N in range(degree + 1)]
        worst_increase = max(worst_increase, max(np.diff(tails), default=0.0))
        worst_final = max(worst_final, tails[-1])

    geometric = SymbolH1.from_coeffs(0.5 ** np.arange(1, order + 1))
    _, values = rank_and_singular_values(gram_matrix(DerivationForm(geometric), order), 1e-10)
    # row 0 is zero, so the last singular value is always 0
    decay = values[order - 1] / values[0]

    passed = worst_increase <= 1e-12 and worst_final <= 1e-12
    details = {"worst_increase": worst_increase, "final_tail": worst_final, "geometric_sv_decay": decay}
    return CheckOutcome(passed, max(worst_increase, worst_final), details)


def norm_sandwich(seed: int, count: int = 8, samples: int = 100, degree: int = 12) -> CheckOutcome:
    """
    lower_mc <= upper and ||h||_1 <= 2e * upper, with ||D_z|| = 2*pi attained.
    """
    symbols = [SymbolH1.monomial(n) for n in (1, 2, 3)]
    symbols.extend(random_symbol(degree, seed, SANDWICH_STREAMS + i) for i in range(count))

    limit = 1.0 + SANDWICH_SLACK
    worst = 0.0
    for i, h in enumerate(symbols):
        D = DerivationForm(h)
        upper = norm_upper_bound(D)
        lower = norm_lower_bound_mc(D, samples, seed + i, degree)
        worst = max(worst, lower / upper, lp_norm(h.poly, 1) / (2.0 * np.e * upper))

    D_z = DerivationForm(SymbolH1.monomial(1))
    attained = abs(bilinear_eval(D_z, AnalyticPoly.monomial(1), AnalyticPoly.one()))
    gap = abs(attained - norm_upper_bound(D_z))
    passed = worst <= limit and gap <= 1e-12
    return CheckOutcome(passed, worst, {"symbols": len(symbols), "dz_gap": gap})


def _homogeneity_error(f: AnalyticPoly, c: complex, seed: int) -> float:
    dual_family = default_dual_family(seed)
    carleson_family = default_carleson_family(seed)
    estimators = (
        lambda p: osc_seminorm(p).value,
        lambda p: dual_seminorm(p, dual_family).value,
        lambda p: carleson_seminorm(p, carleson_family).value,
    )
    worst = 0.0
    for estimate in estimators:
        base = abs(c) * estimate(f)
        worst = max(worst, abs(estimate(f * c) - base) / base)
    return worst


def bmoa_properties(seed: int, triples: int = 100, degree: int = 6, tolerance: float = 1e-9) -> CheckOutcome:
    """Estimators vanish on constants, are absolutely homogeneous and multiplicative bounds hold."""
    constant = AnalyticPoly.constant(3.0 - 2.0j)
    at_constant = max(
        osc_seminorm(constant).value,
        dual_seminorm(constant, default_dual_family(seed)).value,
        carleson_seminorm(constant, default_carleson_family(seed)).value,
    )

    homogeneity = 0.0
    for i in range(3):
        f = random_poly(sample_rng(seed, BMOA_STREAMS + i), degree)
        for c in (3.0, -2.0j):
            homogeneity = max(homogeneity, _homogeneity_error(f, c, seed))

    family = default_carleson_family(seed)
    failures = 0
    for i in range(triples):
        rng = sample_rng(seed, BMOA_STREAMS + 1000 + i)
        f = random_poly(rng, degree)
        g = random_poly(rng, degree)
        failures += int(not carleson_multiplicativity_check(f, g, family))

    passed = at_constant <= 1e-12 and homogeneity <= tolerance and failures == 0
    details = {"at_constant": at_constant, "homogeneity": homogeneity, "multiplicativity_failures": failures}
    return CheckOutcome(passed, max(at_constant, homogeneity), details)


def certificate_determinism(seed: int, degree: int = 12, samples: int = 50) -> CheckOutcome:
    """Two certificate builds from the same seed serialize identically."""
    texts = []
    for _ in range(2):
        cert = build_certificate(random_symbol(degree, seed, PIETSCH_STREAMS))
        verify_certificate(cert, samples, degree, seed)
        texts.append(dumps_json(cert.to_dict()))
    return CheckOutcome(texts[0] == texts[1], 0.0 if texts[0] == texts[1] else 1.0, {"bytes": len(texts[0])})


def lp_checks(seed: int) -> List[Check]:
    """The Littlewood-Paley identity and the moment law."""
    return [
        Check("lp_identity", lp_identity, {"seed": seed}, "Lambda inner products: closed form vs quadrature", 1e-8),
        Check("moment_law", moment_law, {}, "Lambda moments 2*pi/(n+1)^2 vs quadrature", 1e-10),
    ]


def acceptance_suite(seed: int) -> List[Check]:
    """
    Every acceptance property as a Check, in report order.

    Args:
        seed: Base seed for all random batteries

    Returns:
        List of checks with unique names
    """
    params: Dict[str, Any] = {"seed": seed}
    return lp_checks(seed) + [
        Check("symbol_round_trip", symbol_round_trip, params, "extract_symbol inverts h -> D_h", 1e-12),
        Check("b_factorization", b_factorization, params, "D(f)(g) = B(D)(u) and D(1) = 0", 1e-12),
        Check("leibniz", leibniz, params, "Leibniz rule for the dual bimodule", 1e-10),
        Check("exp_trick", exp_trick, params, "D(e^a)(g) = D(a)(e^a g)", 1e-8),
        Check("square_decomposition", square_decomposition, params, "h = alpha z + k1^2 + k2^2", 1e-8),
        Check("pietsch_certificate", pietsch_certificates, params, "control measure domination", 1e-6),
        Check("per_term_dominations", per_term, params, "alpha-term and square-term bounds", 1e-6),
        Check("finite_rank", finite_rank, params, "polynomial symbols give finite rank", 1e-12),
        Check("compactness_trend", compactness_trend, params, "tail bounds decrease to zero", 1e-12),
        Check("norm_sandwich", norm_sandwich, params, "sampled norm below the upper bound", SANDWICH_SLACK),
        Check("bmoa_estimators", bmoa_properties, params, "seminorm estimator properties", 1e-9),
        Check("certificate_determinism", certificate_determinism, params, "byte-identical certificates", 0.0),
    ]
