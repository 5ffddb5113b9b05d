"""
Reparametrization q(u) of a chain under the isotropy group of the log model.

q solves q‴/3q′ − ½(q″/q′)² + (2α²/3)(q′² − 1) = 0 with q(0) = 0,
q′(0) = ρ, q″(0) = 2ρr, and has the Möbius closed form of MobiusQ.
"""

import cmath
import logging
import math

import numpy as np

from src.core.config.settings import settings
from src.domains.chains.errors import ChainSingularity, InvalidChainParameter, PoleError
from src.domains.chains.models import MobiusQ
from src.services.integrator import integrate_rk4

logger = logging.getLogger(__name__)


def solve_q(alpha: float, rho: float, r: float) -> MobiusQ:
    """
    e^{iλ} = (α(1+ρ) + ir)/(α(1+ρ) − ir) and κ = (α(1−ρ) − ir)/(α(1+ρ) + ir).
    """
    if alpha == 0:
        raise InvalidChainParameter("alpha", alpha, "must be nonzero")
    if rho == 0:
        raise InvalidChainParameter("rho", rho, "must be nonzero")
    den = complex(alpha * (1 + rho), r)
    if abs(den) < settings.SINGULARITY_TOL:
        raise PoleError("solve_q", den)
    kappa = complex(alpha * (1 - rho), -r) / den
    lam = cmath.phase(den / den.conjugate())
    assert abs(kappa) != 1, "|kappa| = 1 only for rho = 0"
    return MobiusQ(alpha=float(alpha), lam=lam, kappa=kappa, sign=1 if abs(kappa) < 1 else -1)


def schwarzian_residual(mq: MobiusQ, us) -> float:
    """max |q‴/3q′ − ½(q″/q′)² + (2α²/3)(q′² − 1)| over the grid."""
    worst = 0.0
    for u in us:
        d1, d2, d3 = mq.dq(u), mq.d2q(u), mq.d3q(u)
        value = d3 / (3 * d1) - 0.5 * (d2 / d1) ** 2 + (2 * mq.alpha**2 / 3) * (d1 * d1 - 1)
        worst = max(worst, abs(value))
    return worst


def integrate_schwarzian(
    alpha: float,
    rho: float,
    r: float,
    u_end: float,
    h: float | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    RK4 for (q, q′, q″)′ = (q′, q″, (3/2)q″²/q′ − 2α²q′(q′² − 1)) from (0, ρ, 2ρr).

    Returns the grid and the states, one row (q, q′, q″) per grid point.
    """
    h = settings.CHAIN_STEP if h is None else h

    def rhs(u: float, y: np.ndarray) -> np.ndarray:
        q1, q2 = y[1], y[2]
        if abs(q1) < settings.SINGULARITY_TOL:
            raise ChainSingularity({"u": u, "q": y.tolist()}, abs(q1))
        return np.array([q1, q2, 1.5 * q2 * q2 / q1 - 2 * alpha * alpha * q1 * (q1 * q1 - 1)])

    us, ys = integrate_rk4(rhs, np.array([0.0, rho, 2 * rho * r]), 0.0, u_end, h)
    logger.info(f"Integrated q on [0, {u_end}] with {len(us) - 1} steps of {h}")
    return us, ys


def turn_count(mq: MobiusQ, u1: float, u2: float) -> tuple[int, int]:
    """
    Both sides of [(q(u₂) − q(u₁))/(π/α)] = sign(q′(0))·[(u₂ − u₁)/(π/α)],
    with [·] the integer part.
    """
    period = math.pi / mq.alpha
    lhs = math.trunc((mq.q(u2) - mq.q(u1)) / period)
    rhs = mq.sign * math.trunc((u2 - u1) / period)
    return lhs, rhs
