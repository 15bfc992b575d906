"""
Radial Quadrature Rules

Gauss rules on [0, 1] for the two radial weights that appear in area
integrals over the disc:

* log(1/rho) d(rho), the Littlewood-Paley weight after substituting rho = r^2;
* r (1 - r)^2 dr, the Carleson weight.
"""

from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import linalg as la
from scipy import special

from ..errors import PreconditionError
from ..logging.logger import get_logger

logger = get_logger(__name__)

Rule = Tuple[np.ndarray, np.ndarray]


def _frozen(*arrays: np.ndarray) -> Tuple[np.ndarray, ...]:
    for arr in arrays:
        arr.setflags(write=False)
    return arrays


def gauss_legendre_unit(n: int) -> Rule:
    """n-point Gauss-Legendre rule mapped to [0, 1]."""
    x, w = special.roots_legendre(n)
    return (x + 1.0) / 2.0, w / 2.0


def _discretized_log_measure(points: int) -> Rule:
    """
    Discrete measure exact for log(1/rho) on polynomials of degree < 2*points.

    Writes log(1/rho) = integral_rho^1 ds/s, so that
    integral_0^1 F(rho) log(1/rho) d(rho) = integral_0^1 integral_0^1 F(t*s) dt ds,
    and applies a tensor Gauss-Legendre rule to the right-hand side.
    """
    x, w = gauss_legendre_unit(points)
    nodes = np.outer(x, x).ravel()
    weights = np.outer(w, w).ravel()
    return nodes, weights


def _stieltjes(nodes: np.ndarray, weights: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Recurrence coefficients of the orthonormal polynomials of a discrete measure."""
    alpha = np.zeros(n)
    beta = np.zeros(n)
    q_prev = np.zeros_like(nodes)
    q = np.full_like(nodes, 1.0 / np.sqrt(np.sum(weights)))
    b_prev = 0.0
    for k in range(n):
        alpha[k] = np.sum(weights * nodes * q * q)
        r = (nodes - alpha[k]) * q - b_prev * q_prev
        b = np.sqrt(np.sum(weights * r * r))
        beta[k] = b
        q_prev, q, b_prev = q, r / b, b
    return alpha, beta


@lru_cache(maxsize=64)
def log_weight_rule(n: int) -> Rule:
    """
    n-point Gauss rule for the weight log(1/rho) on [0, 1].

    Built by Golub-Welsch from recurrence coefficients obtained with the
    discretized Stieltjes procedure. Exact for polynomials of degree <= 2n - 1.

    Args:
        n: Number of nodes (>= 1)

    Returns:
        (nodes, weights) as read-only arrays; the weights sum to 1
    """
    if n < 1:
        raise PreconditionError(f"Rule size must be at least 1, got {n}")
    nodes, weights = _discretized_log_measure(n + 8)
    alpha, beta = _stieltjes(nodes, weights, n)
    mass = float(np.sum(weights))
    if n == 1:
        return _frozen(np.array([alpha[0]]), np.array([mass]))
    x, v = la.eigh_tridiagonal(alpha, beta[: n - 1])
    w = mass * v[0, :] ** 2
    logger.debug("log weight rule built", n=n, min_node=float(x[0]), max_node=float(x[-1]))
    return _frozen(x, w)


@lru_cache(maxsize=64)
def carleson_radial_rule(n: int) -> Rule:
    """
    n-point Gauss rule for the weight r (1 - r)^2 on [0, 1].

    Gauss-Jacobi with exponents (2, 1) under r = (1 + x)/2, which turns
    r (1-r)^2 dr into (1+x)(1-x)^2 dx / 16.
    """
    if n < 1:
        raise PreconditionError(f"Rule size must be at least 1, got {n}")
    x, w = special.roots_jacobi(n, 2.0, 1.0)
    return _frozen((1.0 + x) / 2.0, w / 16.0)


def lambda_moment_quad(n: int, nr: int) -> float:
    """integral of |z|^(2n) dLambda by the log-weight rule: 2*pi * sum w_i rho_i^n."""
    nodes, weights = log_weight_rule(nr)
    return float(2.0 * np.pi * np.sum(weights * nodes ** n))
