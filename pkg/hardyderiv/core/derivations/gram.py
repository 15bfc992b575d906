"""
Gram Matrices

Matrix presentation of D_h on monomials and the singular value diagnostics
used for finite rank and compactness.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np
from scipy import linalg as la

from ..circle.poly import AnalyticPoly
from ..errors import InputError, PreconditionError
from ..logging.logger import get_logger
from .form import DerivationForm, Evaluator

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """(N+1) x (N+1) matrix M[j, k] = D_h(z^j)(z^k)."""

    N: int
    entries: np.ndarray

    def as_evaluator(self) -> Evaluator:
        """Bilinear form f^T M g on polynomials of degree <= N."""

        def evaluate(f: AnalyticPoly, g: AnalyticPoly) -> complex:
            if f.trimmed().degree > self.N or g.trimmed().degree > self.N:
                raise PreconditionError(
                    f"Gram matrix of order {self.N} cannot evaluate degrees {f.degree}, {g.degree}"
                )
            fv = f.padded(self.N + 1)[: self.N + 1]
            gv = g.padded(self.N + 1)[: self.N + 1]
            return complex(fv @ self.entries @ gv)

        return evaluate

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "entries": [[[float(v.real), float(v.imag)] for v in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GramMatrix":
        try:
            N = data["N"]
            entries = np.array(
                [[complex(float(re), float(im)) for re, im in row] for row in data["entries"]], dtype=np.complex128
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Invalid Gram matrix data: {e}")
        if isinstance(N, bool) or not isinstance(N, int) or N < 1:
            raise InputError(f"Gram matrix order must be a positive integer, got {N!r}")
        if entries.shape != (N + 1, N + 1):
            raise InputError(
                f"Gram matrix of order {N} needs {N + 1} x {N + 1} entries",
                {"N": N, "shape": list(entries.shape)},
            )
        return cls(N, entries)


def gram_matrix(D: DerivationForm, N: int) -> GramMatrix:
    """
    Gram matrix of D on z^0..z^N.

    Since u_of(z^j, z^k) = j/(j+k) z^(j+k), the entries are
    2*pi * j/(j+k) * conj(h_{j+k}) for j >= 1 and zero in row 0.
    """
    if N < 1:
        raise PreconditionError(f"Gram order must be at least 1, got {N}")

    j, k = np.meshgrid(np.arange(N + 1), np.arange(N + 1), indexing="ij")
    total = j + k
    h = D.symbol.poly.padded(2 * N + 1)
    factor = np.where(j >= 1, j / np.maximum(total, 1), 0.0)
    entries = 2.0 * np.pi * factor * np.conj(h[total])
    return GramMatrix(N, entries)


def rank_and_singular_values(M: GramMatrix, tol: float) -> Tuple[int, List[float]]:
    """
    Singular values in nonincreasing order and the numerical rank.

    Args:
        M: Gram matrix
        tol: Relative threshold; values above tol * s_max count toward the rank

    Returns:
        (rank, singular values)
    """
    if tol <= 0:
        raise PreconditionError(f"Rank tolerance must be positive, got {tol}")
    values = la.svdvals(M.entries)
    largest = float(values[0]) if values.size else 0.0
    rank = 0 if largest == 0.0 else int(np.sum(values > tol * largest))
    logger.debug("gram spectrum computed", N=M.N, rank=rank, largest=largest)
    return rank, [float(v) for v in values]
