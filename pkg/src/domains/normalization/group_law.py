import logging

from src.domains.group.models import GroupElement
from src.domains.group.operations import compose
from src.domains.normalization.models import NormalFormType
from src.domains.normalization.solver import normalize
from src.domains.normalization.transform import compose_total, total_map
from src.domains.scalars.gaussian import CoefficientMode
from src.domains.series.series import DefiningSeries

logger = logging.getLogger(__name__)


def normalization_group_law(
    F_normal: DefiningSeries,
    s1: GroupElement,
    s2: GroupElement,
    t: NormalFormType = NormalFormType(),
    tol: float = 1e-9,
) -> bool:
    """
    Normalizing by σ₂ and then by σ₁ gives the same total map as normalizing by σ₁σ₂.

    Z is compared through weight N−1 and W through weight N, the orders a
    truncated composition determines.
    """
    first = normalize(F_normal, s2, t)
    second = normalize(first.output, s1, t)
    direct = normalize(F_normal, compose(s1, s2), t)

    N = F_normal.trunc
    two_step = compose_total(total_map(second.sigma, second.high, N), total_map(first.sigma, first.high, N))
    one_step = total_map(direct.sigma, direct.high, N)
    gap = two_step.difference(one_step, z_weight=N - 1, w_weight=N)

    limit = 0.0 if F_normal.mode == CoefficientMode.EXACT else tol
    if gap > limit:
        logger.warning("normalization.group_law_violated", extra={"gap": gap, "tolerance": limit, "trunc": N})
        return False
    return True
