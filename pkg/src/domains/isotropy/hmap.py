import logging
from collections.abc import Sequence

import numpy as np

from src.domains.group.models import as_vector
from src.domains.isotropy.correction import g_correction, shift_part, solve_kappa
from src.domains.isotropy.errors import InvalidContext, NotIsotropyDirection
from src.domains.isotropy.models import IsotropyContext, KappaDisplayReport
from src.domains.scalars.gaussian import CoefficientMode, imag_unit, to_scalar
from src.domains.series.models import Monomial
from src.domains.series.series import DefiningSeries, Series
from src.services.errors import LinearSolveError
from src.services.linear_solve import LinearSolver

logger = logging.getLogger(__name__)


def h_map(ctx: IsotropyContext, a: Sequence, solver: LinearSolver | None = None) -> DefiningSeries:
    """H_{l+1}(·; a): real weight-(l+1) series, real-linear in a."""
    return shift_part(ctx, a) + g_correction(ctx, a, solver)


def _basis(ctx: IsotropyContext) -> list:
    n, mode = ctx.sig.n, ctx.mode
    i = imag_unit(mode)
    out = []
    for alpha in range(n):
        for unit in (to_scalar(1, mode), i):
            out.append(as_vector([unit if beta == alpha else 0 for beta in range(n)], mode))
    return out


def _coefficient_matrix(images: list[Series], extra: Series | None = None) -> tuple[np.ndarray, np.ndarray | None]:
    """Real and imaginary parts of each image's coefficients as columns."""
    keys = set()
    for image in images:
        keys.update(image.terms)
    if extra is not None:
        keys.update(extra.terms)
    ordered = sorted(keys, key=lambda m: m.sort_key())
    matrix = np.zeros((2 * len(ordered), len(images)))
    for j, image in enumerate(images):
        for row, m in enumerate(ordered):
            c = complex(image.terms.get(m, 0))
            matrix[2 * row, j], matrix[2 * row + 1, j] = c.real, c.imag
    if extra is None:
        return matrix, None
    rhs = np.zeros(2 * len(ordered))
    for row, m in enumerate(ordered):
        c = complex(extra.terms.get(m, 0))
        rhs[2 * row], rhs[2 * row + 1] = c.real, c.imag
    return matrix, rhs


def injectivity_rank(ctx: IsotropyContext, solver: LinearSolver | None = None) -> int:
    """Numeric rank of the real-linear map ℝ²ⁿ → weight-(l+1) coefficients, a ↦ H_{l+1}(·; a)."""
    solver = solver or LinearSolver()
    images = [h_map(ctx, e, solver) for e in _basis(ctx)]
    matrix, _ = _coefficient_matrix(images)
    rank = solver.rank(matrix)
    if not ctx.F_l.is_zero and rank < 2 * ctx.sig.n:
        logger.warning(
            "isotropy.rank_deficient",
            extra={"l": ctx.l, "rank": rank, "expected": 2 * ctx.sig.n, "signature": str(ctx.sig)},
        )
    return rank


def solve_h_map(ctx: IsotropyContext, target: Series, solver: LinearSolver | None = None) -> np.ndarray:
    """The unique a* with H_{l+1}(·; a*) = target, in float arithmetic."""
    solver = solver or LinearSolver()
    images = [h_map(ctx, e, solver) for e in _basis(ctx)]
    matrix, rhs = _coefficient_matrix(images, target.weight_part(ctx.l + 1))
    if not np.any(rhs):
        return np.zeros(ctx.sig.n, dtype=complex)
    try:
        x = solver.solve_float(matrix, rhs, "isotropy a*")
    except LinearSolveError as e:
        raise NotIsotropyDirection(str(e)) from e
    return np.array([x[2 * alpha] + 1j * x[2 * alpha + 1] for alpha in range(ctx.sig.n)])


def kappa_display_check(ctx: IsotropyContext, a: Sequence, solver: LinearSolver | None = None) -> KappaDisplayReport:
    """
    Compare the κ fixed by Δ²H₂₃ = 0 with the displayed closed form

        ⟨κ,z⟩ = u^e/(4k(k−1)(n+1)(n+2))·{Σ a^α Δ²∂F₃₃/∂z^α + Σ ā^α Δ²∂F₂₄/∂z̄^α}

    for e = 3−k and e = 2−k.
    """
    if ctx.l % 2:
        raise InvalidContext(f"κ only enters for even l, got l = {ctx.l}")
    sig, mode, k, n = ctx.sig, ctx.mode, ctx.k, ctx.sig.n
    a = as_vector(a, mode)
    derived = solve_kappa(ctx, shift_part(ctx, a), solver)
    derived_series = Series.inner_a_z(sig, derived, ctx.l + 1, mode)

    F = ctx.F_l.with_trunc(ctx.l + 1)
    F33, F24 = F.type_part(3, 3), F.type_part(2, 4)
    bracket = Series.zero(sig, ctx.l + 1, mode)
    for alpha in range(n):
        bracket = bracket + F33.d_z(alpha).laplacian(2).scale(a[alpha])
        bracket = bracket + F24.d_zbar(alpha).laplacian(2).scale(a[alpha].conjugate())
    denominator = 4 * k * (k - 1) * (n + 1) * (n + 2)
    bracket = bracket.scale(to_scalar(1, mode) / denominator)

    report = KappaDisplayReport(derived=[complex(x) for x in derived])
    for label, e in (("u^(3-k)", 3 - k), ("u^(2-k)", 2 - k)):
        if any(m.l + e < 0 for m in bracket.terms):
            report.gaps[label] = float("inf")
            continue
        shifted = Series(sig, ctx.l + 1, {Monomial(m.zi, m.zj, m.l + e): c for m, c in bracket.terms.items()}, mode)
        report.gaps[label] = (shifted - derived_series).max_abs()
    tol = 0.0 if mode == CoefficientMode.EXACT else 1e-9 * max(1.0, derived_series.max_abs())
    for label, gap in report.gaps.items():
        if gap <= tol:
            report.matching = label
            break
    return report
