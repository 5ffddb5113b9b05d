import logging
from fractions import Fraction

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from src.core.config.settings import settings
from src.services.errors import InconsistentSystem, ResidualTooLarge, UnderdeterminedSystem

logger = logging.getLogger(__name__)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def integer_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (n, n), ZZ)
    return int(dm.det())


class LinearSolver:
    """
    Solves the small dense systems that come up weight by weight.

    Exact systems go through reduced row echelon form over QQ; float systems
    through least squares with a residual gate.
    """

    def __init__(
        self,
        residual_tol: float | None = None,
        condition_warn: float | None = None,
        rank_tol: float | None = None,
    ):
        self.residual_tol = residual_tol if residual_tol is not None else settings.RESIDUAL_TOL
        self.condition_warn = condition_warn if condition_warn is not None else settings.CONDITION_WARN
        self.rank_tol = rank_tol if rank_tol is not None else settings.RANK_TOL

    def solve_exact(self, rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
        """
        Unique solution of rows·x = rhs over the rationals.

        Raises InconsistentSystem when no solution exists and
        UnderdeterminedSystem when the solution is not unique.
        """
        m = len(rows)
        ncols = len(rows[0]) if rows else 0
        if ncols == 0:
            return []
        aug = [
            [QQ(v.numerator, v.denominator) for v in map(Fraction, row)]
            + [QQ(Fraction(b).numerator, Fraction(b).denominator)]
            for row, b in zip(rows, rhs)
        ]
        reduced, pivots = DomainMatrix(aug, (m, ncols + 1), QQ).rref()
        if ncols in pivots:
            raise InconsistentSystem(m, ncols)
        if len(pivots) < ncols:
            raise UnderdeterminedSystem(len(pivots), ncols)

        table = reduced.to_list()
        solution = [Fraction(0)] * ncols
        for i, col in enumerate(pivots):
            solution[col] = _to_fraction(table[i][ncols])
        return solution

    def solve_float(self, matrix: np.ndarray, rhs: np.ndarray, label: str = "") -> np.ndarray:
        """Least-squares solution; the residual must stay below the tolerance."""
        matrix = np.asarray(matrix, dtype=float)
        rhs = np.asarray(rhs, dtype=float)
        if matrix.shape[1] == 0:
            return np.zeros(0)
        x, _, rank, sv = np.linalg.lstsq(matrix, rhs, rcond=None)
        if rank < matrix.shape[1]:
            raise UnderdeterminedSystem(int(rank), matrix.shape[1])

        cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else float("inf")
        if cond > self.condition_warn:
            logger.warning(
                "linear_solve.ill_conditioned",
                extra={"label": label, "condition": cond, "shape": matrix.shape},
            )

        residual = float(np.linalg.norm(matrix @ x - rhs))
        scale = max(1.0, float(np.linalg.norm(rhs)))
        if residual > self.residual_tol * scale:
            raise ResidualTooLarge(residual, self.residual_tol)
        return x

    def rank(self, matrix: np.ndarray) -> int:
        """Singular values below rank_tol·σ_max count as zero."""
        matrix = np.asarray(matrix, dtype=float)
        if matrix.size == 0:
            return 0
        sv = np.linalg.svd(matrix, compute_uv=False)
        if sv.size == 0 or sv[0] == 0:
            return 0
        return int(np.sum(sv > self.rank_tol * sv[0]))
