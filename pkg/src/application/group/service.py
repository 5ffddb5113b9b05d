import logging

import numpy as np

from src.application.schemas import RunConfig, RunReport
from src.core.config.settings import settings
from src.domains.group.errors import IndeterminatePoint
from src.domains.group.models import GroupElement
from src.domains.group.operations import apply, compose, invert, on_hyperquadric_residue, random_element
from src.domains.group.schemas import element_to_schema
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature
from src.infra.monitoring import timed

logger = logging.getLogger("group_service")

ACTION_TOL = 1e-10


def _hyperquadric_point(sig: Signature, rng: np.random.Generator, radius: float = 0.3) -> tuple[np.ndarray, complex]:
    z = rng.uniform(-radius, radius, sig.n) + 1j * rng.uniform(-radius, radius, sig.n)
    u = float(rng.uniform(-radius, radius))
    return z, complex(u, float(np.sum(np.asarray(sig.eps) * np.abs(z) ** 2)))


def _points_close(p, q, tol: float) -> bool:
    (z1, w1), (z2, w2) = p, q
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    return float(np.max(np.abs(z1 - z2), initial=0.0)) <= tol and abs(complex(w1) - complex(w2)) <= tol


class GroupService:
    def __init__(self, seed: int | None = None):
        self.rng = np.random.default_rng(settings.SEED if seed is None else seed)

    def _tol(self, sigma: GroupElement) -> float:
        return 0.0 if sigma.mode == CoefficientMode.EXACT else 1e-9

    def compose(self, s1: GroupElement, s2: GroupElement, samples: int = 5) -> tuple[RunReport, GroupElement]:
        report = RunReport(config=RunConfig.current("group compose", n=s1.sig.n, e=s1.sig.e))
        product = compose(s1, s2)
        tol = 1e-9
        f1, f2, fp = (s.to_mode(CoefficientMode.FLOAT) for s in (s1, s2, product))
        agree = 0
        for _ in range(samples):
            z, w = _hyperquadric_point(s1.sig, self.rng)
            try:
                two_step = apply(f1, *apply(f2, z, w))
                one_step = apply(fp, z, w)
            except IndeterminatePoint:
                continue
            agree += _points_close(two_step, one_step, tol)
        report.check("compose_matches_action", agree == samples, tolerance=tol, samples=samples, agreeing=agree)
        report.result = {"product": element_to_schema(product).model_dump(mode="json")}
        return report, product

    def invert(self, sigma: GroupElement) -> tuple[RunReport, GroupElement]:
        report = RunReport(config=RunConfig.current("group invert", n=sigma.sig.n, e=sigma.sig.e))
        inverse = invert(sigma)
        tol = self._tol(sigma)
        report.check("inverse_composes_to_identity", compose(sigma, inverse).is_identity(tol), tolerance=tol)
        report.result = {"inverse": element_to_schema(inverse).model_dump(mode="json")}
        return report, inverse

    def action_property(self, sig: Signature, count: int = 10**4) -> RunReport:
        """Random elements map random hyperquadric points back onto the hyperquadric."""
        report = RunReport(config=RunConfig.current("group action", n=sig.n, e=sig.e, count=count))
        worst, skipped = 0.0, 0
        with timed("group_action"):
            for _ in range(count):
                sigma = random_element(sig, self.rng, CoefficientMode.FLOAT, scale=0.5)
                z, w = _hyperquadric_point(sig, self.rng)
                try:
                    z_star, w_star = apply(sigma, z, w)
                except IndeterminatePoint:
                    skipped += 1
                    continue
                # relative to the size of the image point
                scale = max(1.0, abs(complex(w_star)), float(np.sum(np.abs(np.asarray(z_star, dtype=complex)) ** 2)))
                worst = max(worst, on_hyperquadric_residue(sig, z_star, w_star) / scale)
        report.check("hyperquadric_preserved", worst <= ACTION_TOL, tolerance=ACTION_TOL, worst=worst, skipped=skipped)
        return report
