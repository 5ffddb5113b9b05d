import logging

import numpy as np

from src.application.schemas import RunConfig, RunReport
from src.core.config.settings import settings
from src.domains.chains.hyperquadric import integrate_chain, measured_order, oracle_gap
from src.domains.chains.models import ChainState, ChainTrajectory
from src.domains.chains.schwarzian import integrate_schwarzian, schwarzian_residual, solve_q, turn_count
from src.domains.chains.straightening import mv_map_series
from src.domains.normalization.model_series import log_model
from src.domains.normalization.models import NormalFormType
from src.domains.normalization.predicate import is_normal_form
from src.domains.scalars.gaussian import CoefficientMode, to_real
from src.domains.series.models import Signature
from src.domains.series.series import Series
from src.infra.monitoring import timed

logger = logging.getLogger("chain_service")

ORACLE_TOL = 1e-8
ORDER_WINDOW = (3.7, 4.3)
ORDER_STEP = 0.05


class ChainService:
    def __init__(self, seed: int | None = None):
        self.rng = np.random.default_rng(settings.SEED if seed is None else seed)

    def chain(self, sig: Signature, a, u_end: float, h: float | None = None, literal: bool = False) -> tuple[RunReport, ChainTrajectory]:
        """Chain from (p, p′, u) = (0, a, 0) with the line-section oracle and a step-halving order check."""
        h = settings.CHAIN_STEP if h is None else h
        a = np.asarray(a, dtype=complex)
        report = RunReport(
            config=RunConfig.current(
                "chain", n=sig.n, e=sig.e, a=str(a.tolist()), u_end=u_end, h=h, literal=literal
            )
        )
        with timed("chain_integrate"):
            trajectory = integrate_chain(ChainState.of(np.zeros(sig.n), a, 0.0), u_end, sig, h, literal)

        defect = float(np.max(trajectory.line_defect))
        report.check("chain_line_defect", defect <= ORACLE_TOL, tolerance=ORACLE_TOL, max_defect=defect)
        if not literal:
            gap = oracle_gap(trajectory, a, sig)
            report.check("chain_line_section_oracle", gap <= ORACLE_TOL, tolerance=ORACLE_TOL, sup_error=gap)
            order = measured_order(a, u_end, ORDER_STEP, sig)
            in_window = ORDER_WINDOW[0] <= order <= ORDER_WINDOW[1]
            report.check("rk4_convergence_order", in_window, tolerance="4 +/- 0.3", order=order)
        report.result = {"steps": len(trajectory.u) - 1, "max_line_defect": defect}
        return report, trajectory

    def mv_q(self, alpha: float, rho: float, r: float, u_end: float = 1.0, h: float | None = None, pairs: int = 50) -> RunReport:
        h = settings.CHAIN_STEP if h is None else h
        report = RunReport(config=RunConfig.current("mv q", alpha=alpha, rho=rho, r=r, u_end=u_end, h=h))
        mq = solve_q(alpha, rho, r)
        grid = np.linspace(0.0, u_end, 201)
        residual = schwarzian_residual(mq, grid)
        report.check("schwarzian_residual", residual <= ORACLE_TOL, tolerance=ORACLE_TOL, residual=residual)

        us, ys = integrate_schwarzian(alpha, rho, r, u_end, h)
        gap = max(abs(y[0] - mq.q(float(u))) for u, y in zip(us, ys))
        report.check("schwarzian_rk4_matches_closed_form", gap <= ORACLE_TOL, tolerance=ORACLE_TOL, gap=gap)

        bad = []
        period = np.pi / alpha
        for _ in range(pairs):
            u1, u2 = sorted(self.rng.uniform(-3 * period, 3 * period, 2))
            lhs, rhs = turn_count(mq, float(u1), float(u2))
            if lhs != rhs:
                bad.append((float(u1), float(u2), lhs, rhs))
        report.check("turn_count_relation", not bad, tolerance="exact", pairs=pairs, failures=len(bad))

        report.result = {
            "kappa": [mq.kappa.real, mq.kappa.imag],
            "lambda": mq.lam,
            "sign": mq.sign,
        }
        return report

    def mv_map(self, sig: Signature, alpha, trunc: int, mode: CoefficientMode = CoefficientMode.EXACT) -> RunReport:
        """Image of the hyperquadric under the straightening map against the log model."""
        report = RunReport(config=RunConfig.current("mv map", n=sig.n, e=sig.e, alpha=str(alpha), trunc=trunc))
        alpha = to_real(alpha, mode)
        with timed("mv_map"):
            image = mv_map_series(log_model(sig, trunc, 0, mode), alpha)
        ok, defects = is_normal_form(image, NormalFormType(alpha, 0))
        report.check("mv_image_is_normal_form", ok, tolerance="exact" if mode == CoefficientMode.EXACT else 1e-10)

        Q = Series.hermitian(sig, trunc, mode)
        quartic = image.weight_part(4) - Q.mul(Q).scale(2 * alpha)
        gap = quartic.max_abs()
        report.check("mv_quartic_coefficient", gap <= (0.0 if mode == CoefficientMode.EXACT else 1e-12), tolerance="2*alpha", gap=gap)
        report.result = {
            "model_gap": (image - log_model(sig, trunc, alpha, mode)).max_abs(),
            "defects": [entry._asdict() for entry in defects.defects],
        }
        return report
