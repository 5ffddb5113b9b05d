import logging

import numpy as np

from src.application.schemas import RunConfig, RunReport
from src.core.config.settings import settings
from src.domains.isotropy.extraction import a_of_U, r_of_U, rho_of_U
from src.domains.isotropy.hmap import injectivity_rank
from src.domains.isotropy.models import IsotropyContext
from src.domains.normalization.projection import random_normal_form
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.models import Signature
from src.domains.series.series import DefiningSeries, Series
from src.infra.monitoring import timed

logger = logging.getLogger("isotropy_service")


class IsotropyService:
    def __init__(self, seed: int | None = None):
        self.rng = np.random.default_rng(settings.SEED if seed is None else seed)

    def random_context(self, sig: Signature, l: int) -> IsotropyContext:
        F = random_normal_form(sig, l + 2, self.rng, CoefficientMode.FLOAT, min_weight=l, max_weight=l)
        return IsotropyContext.from_normal_form(F)

    def rank(self, sig: Signature, l: int, samples: int = 50) -> RunReport:
        """Rank of a ↦ H_{l+1} for random normal forms F_l, and for F_l = 0."""
        report = RunReport(config=RunConfig.current("isotropy rank", n=sig.n, e=sig.e, l=l, samples=samples))
        ranks = []
        with timed("injectivity_rank"):
            for _ in range(samples):
                ranks.append(injectivity_rank(self.random_context(sig, l)))
        expected = 2 * sig.n
        report.check("h_map_injective", all(r == expected for r in ranks), tolerance="rank", expected=expected, ranks=ranks)

        zero = IsotropyContext.build(Series.zero(sig, l, CoefficientMode.FLOAT), l)
        zero_rank = injectivity_rank(zero)
        report.check("h_map_zero_for_spherical", zero_rank == 0, tolerance="rank", rank=zero_rank)
        report.result = {"ranks": ranks, "zero_rank": zero_rank}
        return report

    def extract(self, F: DefiningSeries, U, target: DefiningSeries | None = None, literal: bool = False) -> RunReport:
        """ρ(U), then a(U), then r(U) for an element of the isotropy group of F."""
        report = RunReport(config=RunConfig.current("isotropy extract", n=F.sig.n, e=F.sig.e, literal=literal))
        rho = rho_of_U(F, U)
        a_star, a = a_of_U(F, U, rho, literal)
        r = r_of_U(F, U, rho, a, literal, target)
        report.result = {
            "rho": rho,
            "a_star": [[complex(x).real, complex(x).imag] for x in a_star],
            "a": [[complex(x).real, complex(x).imag] for x in a],
            "r": r,
        }
        logger.info(f"Extracted rho={rho:.6g}, r={r:.6g}")
        return report
