"""
Chains of the hyperquadric v = ⟨z,z⟩.

A chain through the origin is the section of the hyperquadric by a complex
line z = a·w. Along it X = ⟨p,p′⟩ satisfies 1 + i(X − X̄) = 1/(1 − 2⟨a,a⟩v)
and w′ = 1 + i(X + X̄), which gives the default right-hand side

    p″ = 2ip′⟨p′,p′⟩(1 + iX − iX̄)/(1 + iX + iX̄).
"""

import logging
import math

import numpy as np

from src.core.config.settings import settings
from src.domains.chains.errors import ChainSingularity, PoleError
from src.domains.chains.models import ChainState, ChainTrajectory, herm_c
from src.domains.series.models import Signature
from src.services.integrator import rk4_steps

logger = logging.getLogger(__name__)


def hyperquadric_chain_rhs(state: ChainState, sig: Signature, literal: bool = False, tol: float | None = None) -> np.ndarray:
    """
    p″ for the chain through state.

    literal=True evaluates 2ip′⟨p′,p′⟩(1 + 3iX − iX̄)/((1 + iX − iX̄)(1 + 2iX − 2iX̄)),
    which agrees with the default to first order at p = 0.
    """
    tol = settings.SINGULARITY_TOL if tol is None else tol
    p, dp = state.p, state.dp
    X = herm_c(sig, p, dp)
    Xb = herm_c(sig, dp, p)
    speed = herm_c(sig, dp, dp)
    if literal:
        num = 1 + 3j * X - 1j * Xb
        den = (1 + 1j * X - 1j * Xb) * (1 + 2j * X - 2j * Xb)
    else:
        num = 1 + 1j * X - 1j * Xb
        den = 1 + 1j * X + 1j * Xb
    if abs(den) < tol:
        raise ChainSingularity(state, abs(den))
    return 2j * dp * speed * num / den


def line_defect(sig: Signature, start: ChainState, z: np.ndarray, w: complex) -> float:
    """Distance of (z, w) from the complex line through the start point along its velocity."""
    p0, w0 = start.point(sig)
    dp0, dw0 = start.velocity(sig)
    c = (w - w0) / dw0
    return float(np.linalg.norm(z - p0 - c * dp0))


def integrate_chain(
    s0: ChainState,
    u_end: float,
    sig: Signature,
    h: float | None = None,
    literal: bool = False,
) -> ChainTrajectory:
    """
    RK4 trajectory of the chain from s0 to u_end.

    Points (p(u), u + i⟨p,p⟩) lie on the hyperquadric by construction. A
    singularity raises ChainSingularity carrying the trajectory so far.
    """
    h = settings.CHAIN_STEP if h is None else h
    n = sig.n

    def rhs(u: float, y: np.ndarray) -> np.ndarray:
        state = ChainState(y[:n], y[n:], u)
        return np.concatenate([y[n:], hyperquadric_chain_rhs(state, sig, literal)])

    us, zs, ws, defects = [], [], [], []

    def collect() -> ChainTrajectory:
        return ChainTrajectory(sig, np.array(us), np.array(zs).reshape(len(us), n), np.array(ws), np.array(defects))

    y0 = np.concatenate([s0.p, s0.dp]).astype(complex)
    try:
        for u, y in rk4_steps(rhs, y0, s0.u, u_end, h):
            z, w = ChainState(y[:n], y[n:], u).point(sig)
            us.append(u)
            zs.append(z)
            ws.append(w)
            defects.append(line_defect(sig, s0, z, w))
    except ChainSingularity as e:
        logger.warning("chains.singularity", extra={"u": us[-1] if us else s0.u, "steps": len(us)})
        raise ChainSingularity(e.state, e.denominator, partial=collect()) from e
    return collect()


def chain_closed_form(a, rho: float, r: float, u_star: float, sig: Signature) -> tuple[np.ndarray, complex]:
    """w = ρ⁻¹u*/(1 − ρ⁻¹u*(−r + i⟨a,a⟩)), z = a·w."""
    a = np.asarray(a, dtype=complex)
    t = u_star / rho
    den = 1 - t * (-r + 1j * herm_c(sig, a, a))
    if abs(den) < settings.SINGULARITY_TOL:
        raise PoleError("chain_closed_form", den)
    w = t / den
    return a * w, w


def line_section_point(a, u: float, sig: Signature) -> tuple[np.ndarray, complex]:
    """
    Point of {z = a·w} ∩ {v = ⟨z,z⟩} with Re w = u on the branch through 0.

    v = (1 − √(1 − 4A²u²))/(2A) with A = ⟨a,a⟩, and v = 0 for A = 0.
    """
    a = np.asarray(a, dtype=complex)
    A = herm_c(sig, a, a).real
    if A == 0:
        v = 0.0
    else:
        disc = 1 - 4 * A * A * u * u
        if disc < 0:
            raise PoleError("line_section_point", disc)
        # cancellation-free form of (1 − √disc)/(2A)
        v = 2 * A * u * u / (1 + math.sqrt(disc))
    w = complex(u, v)
    return a * w, w


def chain_transversality_det(a, c: complex, sig: Signature) -> complex:
    """1 − 2ic̄⟨a,a⟩ for the line {c·(a, 1)}."""
    a = np.asarray(a, dtype=complex)
    return complex(1 - 2j * np.conj(c) * herm_c(sig, a, a))


def oracle_gap(trajectory: ChainTrajectory, a, sig: Signature) -> float:
    """Largest distance of a chain started at (0, a, 0) from its exact line section."""
    worst = 0.0
    for u, z, w in zip(trajectory.u, trajectory.z, trajectory.w):
        z_exact, w_exact = line_section_point(a, float(u), sig)
        worst = max(worst, float(np.linalg.norm(z - z_exact)), abs(w - w_exact))
    return worst


def measured_order(a, u_end: float, h: float, sig: Signature) -> float:
    """log₂ of the endpoint error ratio under h → h/2, against the line-section oracle."""
    start = ChainState.of(np.zeros(sig.n), a, 0.0)
    z_exact, _ = line_section_point(a, u_end, sig)
    errors = []
    for step in (h, h / 2):
        trajectory = integrate_chain(start, u_end, sig, step)
        errors.append(float(np.linalg.norm(trajectory.z[-1] - z_exact)))
    if errors[1] == 0:
        return math.inf
    return math.log2(errors[0] / errors[1])
