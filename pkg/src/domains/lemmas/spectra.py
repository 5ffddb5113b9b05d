import logging
import math

import numpy as np

from src.domains.lemmas.errors import InvalidRange
from src.domains.lemmas.matrices import build
from src.domains.lemmas.models import BandMatrixSpec, MatrixFamily

logger = logging.getLogger(__name__)

EIGS_M_MAX = 200


def _symmetrized(m: int) -> np.ndarray:
    """
    Symmetric tridiagonal matrix similar to A_m.

    The off-diagonal products 2(s+1)(m−s) are positive, so a diagonal
    similarity turns both off-diagonals into their geometric mean.
    """
    a = build(BandMatrixSpec(MatrixFamily.A, m))
    diag = np.array([a[s][s] for s in range(m + 1)], dtype=float)
    off = np.array([math.sqrt(a[s][s + 1] * a[s + 1][s]) for s in range(m)], dtype=float)
    return np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)


def eigs_A(m: int) -> list[float]:
    """Eigenvalues of A_m, ascending."""
    if not 1 <= m <= EIGS_M_MAX:
        raise InvalidRange("m", m, f"dense eigenvalues are computed for 1 <= m <= {EIGS_M_MAX}")
    return [float(x) for x in np.linalg.eigvalsh(_symmetrized(m))]


def eigenvalue_formula(m: int) -> list[float]:
    """3m/2 + (m−2s)√17/2 for s = 0..m, ascending."""
    root = math.sqrt(17)
    return sorted(1.5 * m + 0.5 * (m - 2 * s) * root for s in range(m + 1))


def eigenvalue_gap(m: int) -> float:
    """max_s |eig_s(A_m) − formula_s| divided by 1 + 3m/2."""
    gap = max(abs(x - y) for x, y in zip(eigs_A(m), eigenvalue_formula(m)))
    return gap / (1 + 1.5 * m)


def c_eigenvalue_product(m: int) -> float:
    """Π (eig_s(A_m) − (m−4)), the float image of det C_m."""
    return float(np.prod([x - (m - 4) for x in eigs_A(m)]))
