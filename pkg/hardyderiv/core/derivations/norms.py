"""
Norm Bounds

Upper bounds on the operator norm of D_h from the square decomposition,
Monte Carlo lower bounds over the uniform-norm ball, and the tail bounds
that show D_h is a norm limit of finite-rank derivations.
"""

from functools import lru_cache
from typing import Optional

import numpy as np

from ..circle.grid import sup_norm
from ..circle.poly import AnalyticPoly
from ..errors import PreconditionError
from ..hardy.symbols import SymbolH1, fejer_truncate, random_poly, sample_rng
from ..logging.logger import get_logger
from .form import DerivationForm, bilinear_eval

logger = get_logger(__name__)

TAIL_SCHEMES = ("vallee_poussin", "fejer")


def norm_upper_bound(D: DerivationForm) -> float:
    """
    Upper bound |alpha|*2*pi + 8*||k1||_2^2 + 8*||k2||_2^2 on ||D_h||.

    Uses ||D_z|| = 2*pi and ||D_{k^2}|| <= 8*||k||_2^2 on each piece of
    D_h = alpha*D_z + D_{k1^2} + D_{k2^2}.
    """
    if D.symbol.is_zero():
        return 0.0
    dec = D.decomposition
    return float(abs(dec.alpha) * 2.0 * np.pi + 8.0 * dec.k1.l2_norm_squared() + 8.0 * dec.k2.l2_norm_squared())


@lru_cache(maxsize=256)
def monomial_upper_bound(n: int) -> float:
    """norm_upper_bound of D_{z^n}."""
    return norm_upper_bound(DerivationForm(SymbolH1.monomial(n)))


def _pair_ratio(D: DerivationForm, f: AnalyticPoly, g: AnalyticPoly) -> float:
    denominator = sup_norm(f) * sup_norm(g)
    if denominator == 0.0:
        return 0.0
    return abs(bilinear_eval(D, f, g)) / denominator


def norm_lower_bound_mc(D: DerivationForm, samples: int, seed: int, deg: int) -> float:
    """
    Empirical lower bound max |D(f)(g)| / (sup|f| * sup|g|).

    The candidate set always contains the monomial pairs (z^j, z^k) for
    1 <= j <= deg, 0 <= k <= deg, followed by ``samples`` random pairs drawn
    from the (seed, i) streams, so the result is deterministic.

    Args:
        D: Derivation
        samples: Number of random pairs (>= 1)
        seed: Base seed
        deg: Degree of the sampled polynomials

    Returns:
        Largest observed ratio
    """
    if samples < 1:
        raise PreconditionError(f"Sample count must be at least 1, got {samples}")
    if D.symbol.is_zero():
        return 0.0

    best = 0.0
    for j in range(1, deg + 1):
        for k in range(deg + 1):
            best = max(best, _pair_ratio(D, AnalyticPoly.monomial(j), AnalyticPoly.monomial(k)))

    for i in range(samples):
        rng = sample_rng(seed, i)
        f = random_poly(rng, deg)
        g = random_poly(rng, deg)
        best = max(best, _pair_ratio(D, f, g))

    logger.debug("norm lower bound sampled", samples=samples, seed=seed, deg=deg, value=best)
    return best


def _vallee_poussin_tail_weights(N: int, length: int) -> np.ndarray:
    n = np.arange(length)
    return np.clip(n / (N + 1.0) - 1.0, 0.0, 1.0)


def fejer_tail_bound(D: DerivationForm, N: int, scheme: Optional[str] = None) -> float:
    """
    Upper bound on the distance from D_h to a finite-rank derivation of order N.

    Args:
        D: Derivation
        N: Approximation order (>= 0)
        scheme: "vallee_poussin" (default) bounds ||D_h - D_{V_N h}|| termwise by
            sum_n |w_n h_n| * norm_upper_bound(D_{z^n}), which is non-increasing
            in N and exactly 0 once N >= deg h; "fejer" returns
            norm_upper_bound(D_{h - sigma_N h}).

    Returns:
        Nonnegative tail bound
    """
    if N < 0:
        raise PreconditionError(f"Approximation order must be nonnegative, got {N}")
    scheme = scheme or "vallee_poussin"
    if scheme not in TAIL_SCHEMES:
        raise PreconditionError(f"Unknown tail scheme '{scheme}'", {"schemes": list(TAIL_SCHEMES)})

    h = D.symbol.poly.coeffs
    if scheme == "fejer":
        tail = D.symbol - fejer_truncate(D.symbol, N)
        return norm_upper_bound(DerivationForm(tail))

    weights = _vallee_poussin_tail_weights(N, h.size)
    total = 0.0
    for n in np.flatnonzero(weights * np.abs(h)):
        total += float(weights[n] * abs(h[n])) * monomial_upper_bound(int(n))
    return total
