"""
The map z* = z/(1 − iαw), w* = (1/2iα)·ln((1 + iαw)/(1 − iαw)) = (1/α)·tan⁻¹(αw),
which sends the hyperquadric to the log model of type (α, 0).
"""

import cmath

import numpy as np

from src.core.config.settings import settings
from src.domains.chains.errors import BranchCutError, InvalidChainParameter, PoleError
from src.domains.group.models import GroupElement
from src.domains.normalization.transform import transform_defining
from src.domains.scalars.gaussian import CoefficientMode, imag_unit, to_real
from src.domains.series.maps import MapSeries
from src.domains.series.models import Monomial, Signature, unit_index
from src.domains.series.series import DefiningSeries, Series


def _check_alpha(alpha) -> None:
    if alpha == 0:
        raise InvalidChainParameter("alpha", alpha, "the map degenerates to the identity only in the limit")


def mv_map_point(z, w: complex, alpha: float, guard: float | None = None) -> tuple[np.ndarray, complex]:
    _check_alpha(alpha)
    guard = settings.BRANCH_GUARD if guard is None else guard
    z = np.asarray(z, dtype=complex)
    x = alpha * complex(w)
    # the principal log of (1 + ix)/(1 − ix) is cut along x ∈ i·(−∞, −1] ∪ i·[1, ∞)
    if abs(x.real) < 1 - guard and abs(x.imag) > guard:
        raise BranchCutError(x, guard)
    den = 1 - 1j * x
    if abs(den) < settings.SINGULARITY_TOL:
        raise PoleError("mv_map", den)
    w_star = cmath.log((1 + 1j * x) / den) / (2j * alpha)
    return z / den, w_star


def mv_series(sig: Signature, trunc: int, alpha, mode: CoefficientMode = CoefficientMode.EXACT) -> MapSeries:
    """
    Higher part of the map as holomorphic series:
    f = z·Σ_{k≥1}(iαw)^k, g = Σ_{k≥1} (−1)^k α^{2k} w^{2k+1}/(2k+1).
    """
    _check_alpha(alpha)
    alpha = to_real(alpha, mode)
    i = imag_unit(mode)
    zero = (0,) * sig.n
    f = []
    for beta in range(sig.n):
        terms = {}
        for k in range(1, (trunc - 1) // 2 + 1):
            terms[Monomial(unit_index(sig.n, beta), zero, k)] = (i * alpha) ** k
        f.append(Series(sig, trunc, terms, mode))
    g_terms = {}
    for k in range(1, (trunc - 2) // 4 + 1):
        g_terms[Monomial(zero, zero, 2 * k + 1)] = to_real((-1) ** k, mode) * alpha ** (2 * k) / (2 * k + 1)
    return MapSeries(sig, trunc, tuple(f), Series(sig, trunc, g_terms, mode))


def mv_map_series(F: DefiningSeries, alpha) -> DefiningSeries:
    """Defining series of the image of v = F under the map."""
    high = mv_series(F.sig, F.trunc, alpha, F.mode)
    return transform_defining(F, GroupElement.identity(F.sig, F.mode), high)
