"""
Recovery of ρ, a and r from U for an element (U, a, ρ, r) of the isotropy
group of a nonspherical normal form.

All three functions work in float arithmetic: ρ involves a real root of
degree 2/(l−2) and a involves √|ρ|.
"""

import hashlib
import logging

import numpy as np

from src.core.config.settings import settings
from src.domains.group.models import GroupElement, form_matrix
from src.domains.isotropy.errors import DegenerateSamplePoints, IncompatibleU, InvalidContext
from src.domains.isotropy.hmap import solve_h_map
from src.domains.isotropy.models import IsotropyContext, lowest_component
from src.domains.normalization.solver import normalize
from src.domains.scalars.gaussian import CoefficientMode, imag_unit
from src.domains.series.models import DecomposeMode
from src.domains.series.series import DefiningSeries, Series

logger = logging.getLogger(__name__)

# (scale of z = 𝟙·scale, u)
SAMPLE_POINTS = ((1.0, 1.0), (0.5, 1.0), (1.0, 0.5))
RESAMPLE_ATTEMPTS = 8


def form_sign(F: DefiningSeries, U) -> int:
    """λ = (1/n)·Δ⟨Uz,Uz⟩, which must be ±1 with ⟨Uz,Uz⟩ = λ⟨z,z⟩."""
    sig = F.sig
    U = np.asarray(U, dtype=complex)
    if U.shape != (sig.n, sig.n):
        raise IncompatibleU(f"expected shape ({sig.n},{sig.n}), got {U.shape}")
    E = np.asarray(form_matrix(sig, CoefficientMode.FLOAT))
    eps = np.array(sig.eps, dtype=float)
    lam = float(np.sum(eps[None, :] * eps[:, None] * np.abs(U) ** 2)) / sig.n
    sign = 1 if lam > 0 else -1
    if abs(abs(lam) - 1) > 1e-9 or not np.allclose(U.conj().T @ E @ U, sign * E, atol=1e-9):
        raise IncompatibleU(f"<Uz,Uz> is not ±<z,z> (trace ratio {lam:.6g})")
    return sign


def _u_inverse(F: DefiningSeries, U: np.ndarray, sign: int) -> np.ndarray:
    E = np.asarray(form_matrix(F.sig, CoefficientMode.FLOAT))
    return sign * (E @ U.conj().T @ E)


def _sample_points(F: DefiningSeries):
    """Fixed sample points, then pseudo-random ones seeded by the series."""
    n = F.sig.n
    for scale, u in SAMPLE_POINTS:
        yield np.full(n, scale, dtype=complex), u
    digest = hashlib.sha256(repr(F.sorted_terms()).encode()).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    for _ in range(RESAMPLE_ATTEMPTS):
        yield rng.normal(size=n) + 1j * rng.normal(size=n), float(rng.uniform(0.25, 1.5))


def _consistent(values: list[float], tol: float) -> bool:
    ref = values[0]
    return all(abs(v - ref) <= tol * max(1.0, abs(ref)) for v in values)


def _pullback(G: Series, M: np.ndarray, s: float) -> Series:
    """G(Mz, conj(Mz), s·u)."""
    sig, mode, cap = G.sig, G.mode, G.trunc
    zs = [Series.z(sig, beta, cap, mode) for beta in range(sig.n)]
    lin_z = [sum(zs[beta].scale(complex(M[alpha, beta])) for beta in range(sig.n)) for alpha in range(sig.n)]
    lin_zbar = [part.conj() for part in lin_z]
    return G.compose(lin_z, lin_zbar, Series.u(sig, cap, mode).scale(s), cap)


def rho_of_U(F: DefiningSeries, U, tol: float | None = None) -> float:
    """ρ(U) = λ·(λF_l(U⁻¹z, λu)/F_l(z, u))^{2/(l−2)}."""
    tol = settings.SAMPLE_TOL if tol is None else tol
    F = F.to_mode(CoefficientMode.FLOAT)
    U = np.asarray(U, dtype=complex)
    lam = form_sign(F, U)
    l, F_l = lowest_component(F)
    U_inv = _u_inverse(F, U, lam)

    values = []
    for z, u in _sample_points(F):
        base = F_l.evaluate(z, u)
        if abs(base) <= settings.SINGULARITY_TOL:
            continue
        ratio = (lam * F_l.evaluate(U_inv @ z, lam * u) / base).real
        if ratio <= 0:
            continue
        values.append(lam * ratio ** (2 / (l - 2)))
        if len(values) == len(SAMPLE_POINTS):
            break
    if not values or not _consistent(values, tol):
        raise DegenerateSamplePoints("F_l", RESAMPLE_ATTEMPTS + len(SAMPLE_POINTS))
    logger.info(f"rho(U) = {values[0]:.12g} from {len(values)} sample points (l = {l})")
    return values[0]


def a_of_U(F: DefiningSeries, U, rho: float, literal: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """
    (a*, a) with H_{l+1}(·; a*) = F_{l+1} − ρF_{l+1}(C⁻¹z, ρ⁻¹u) and a = ρ|ρ|^{−1/2}U⁻¹a*.

    With literal=True the pulled-back term is written as
    sign(ρ)|ρ|^{(l+3)/2}F_{l+1}(U⁻¹z, sign(ρ)u), which agrees when |ρ| = 1.
    """
    F = F.to_mode(CoefficientMode.FLOAT)
    U = np.asarray(U, dtype=complex)
    lam = form_sign(F, U)
    ctx = IsotropyContext.from_normal_form(F)
    l = ctx.l
    if F.trunc < l + 1:
        raise InvalidContext(f"a(U) needs weight {l + 1}, series is truncated at {F.trunc}")
    U_inv = _u_inverse(F, U, lam)
    F_next = F.weight_part(l + 1).with_trunc(l + 1)

    if literal:
        pulled = _pullback(F_next, U_inv, lam).scale(lam * abs(rho) ** ((l + 3) / 2))
    else:
        C_inv = U_inv / np.sqrt(abs(rho))
        pulled = _pullback(F_next, C_inv, 1 / rho).scale(rho)
    a_star = solve_h_map(ctx, F_next - pulled)
    a = rho * abs(rho) ** -0.5 * (U_inv @ a_star)
    return a_star, a


def r_denominator(ctx: IsotropyContext, literal: bool = False) -> Series:
    """Σ_st{((l+s+t−4)u + 2(s−t)i⟨z,z⟩)F_st − 2⟨z,z⟩²∂F_st/∂u}; literal=True drops the −4."""
    sig, mode, cap = ctx.sig, ctx.mode, ctx.l + 2
    shift = 0 if literal else 4
    i = imag_unit(mode)
    F = ctx.F_l.with_trunc(cap)
    Q = Series.hermitian(sig, cap, mode)
    u = Series.u(sig, cap, mode)
    out = Series.zero(sig, cap, mode)
    for (s, t), part in F.decompose(DecomposeMode.BY_TYPE).items():
        out = out + part.mul(u.scale(ctx.l + s + t - shift) + Q.scale(2 * i * (s - t)))
    return out - Q.mul(Q).mul(F.d_u()).scale(2)


def r_of_U(
    F: DefiningSeries,
    U,
    rho: float,
    a,
    literal: bool = False,
    target: DefiningSeries | None = None,
    tol: float | None = None,
) -> float:
    """
    r(U) = −2{ρ⁻¹T_{l+2}(Cz, ρu) − F̃_{l+2}(z, u; a)}/D(z, u).

    F̃ is the normalization of F with initial value (I, a, 1, 0), T the image
    normal form (F itself for an element of the isotropy group of F), and D
    the denominator of r_denominator.
    """
    tol = settings.SAMPLE_TOL if tol is None else tol
    F = F.to_mode(CoefficientMode.FLOAT)
    T = F if target is None else target.to_mode(CoefficientMode.FLOAT)
    U = np.asarray(U, dtype=complex)
    form_sign(F, U)
    ctx = IsotropyContext.from_normal_form(F)
    l = ctx.l
    if F.trunc < l + 2:
        raise InvalidContext(f"r(U) needs weight {l + 2}, series is truncated at {F.trunc}")

    a = np.asarray(a, dtype=complex)
    if np.any(a):
        shifted = GroupElement.build(F.sig, np.eye(F.sig.n), a, 1.0, 0.0, CoefficientMode.FLOAT)
        F_tilde = normalize(F, shifted).output
    else:
        F_tilde = F
    T_next = T.weight_part(l + 2)
    F_next = F_tilde.weight_part(l + 2)
    D = r_denominator(ctx, literal)
    C = U * np.sqrt(abs(rho))

    values = []
    for z, u in _sample_points(F):
        d = D.evaluate(z, u)
        if abs(d) <= settings.SINGULARITY_TOL:
            continue
        lhs = T_next.evaluate(C @ z, rho * u) / rho - F_next.evaluate(z, u)
        values.append((-2 * lhs / d).real)
        if len(values) == len(SAMPLE_POINTS):
            break
    if not values or not _consistent(values, tol):
        raise DegenerateSamplePoints("the r(U) denominator", RESAMPLE_ATTEMPTS + len(SAMPLE_POINTS))
    logger.info(f"r(U) = {values[0]:.12g} from {len(values)} sample points (l = {l}, literal={literal})")
    return values[0]
