from src.domains.scalars.gaussian import CoefficientMode, to_real
from src.domains.series.models import Signature
from src.domains.series.series import DefiningSeries, Series


def log_model(sig: Signature, trunc: int, alpha=0, mode: CoefficientMode = CoefficientMode.EXACT) -> DefiningSeries:
    """
    (1/4α)·ln 1/(1 − 4α⟨z,z⟩) = Σ_{m≥1} (4α)^(m−1)·⟨z,z⟩^m/m through weight trunc.

    α = 0 gives the hyperquadric ⟨z,z⟩.
    """
    alpha = to_real(alpha, mode)
    Q = Series.hermitian(sig, trunc, mode)
    if alpha == 0:
        return Q
    model, power = Q, Q
    for m in range(2, trunc // 2 + 1):
        power = power.mul(Q)
        model = model + power.scale((4 * alpha) ** (m - 1) / m)
    return model
