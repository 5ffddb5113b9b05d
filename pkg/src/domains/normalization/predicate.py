import logging

from src.domains.normalization.errors import InsufficientTruncation, WeightTwoMismatch
from src.domains.normalization.model_series import log_model
from src.domains.normalization.models import DefectEntry, NormalFormReport, NormalFormType
from src.domains.scalars.gaussian import CoefficientMode, to_real
from src.domains.series.series import DefiningSeries, Series

logger = logging.getLogger(__name__)

MIN_TRUNC = 6


def quartic_target(R: Series, weight: int, beta) -> Series:
    """β·Δ⁴((R₂₂)²) restricted to the weight-(weight+2) part of the square; R₂₂ below `weight`."""
    low22 = R.filter(lambda m: m.type == (2, 2) and m.weight < weight)
    if low22.is_zero or beta == 0:
        return Series.zero(R.sig, R.trunc, R.mode)
    square = low22.with_trunc(weight + 2).mul(low22.with_trunc(weight + 2))
    return square.weight_part(weight + 2).laplacian(4).scale(beta)


def condition_values(Y: Series, weight: int, target33: Series | None = None) -> dict:
    """
    Values of the normal-form functionals on the weight-`weight` part Y of F − model.

    Keys are (label, monomial); each value must vanish.
    """
    values: dict = {}
    for m, c in Y.terms.items():
        if min(m.type) <= 1:
            values[("min(s,t)<=1", m)] = c
    for label, (s, t), order in (
        ("laplacian F22", (2, 2), 1),
        ("laplacian^2 F23", (2, 3), 2),
        ("laplacian^2 F32", (3, 2), 2),
        ("laplacian^3 F33", (3, 3), 3),
    ):
        part = Y.type_part(s, t)
        if not part.is_zero:
            for m, c in part.laplacian(order).terms.items():
                values[(label, m)] = c
    if target33 is not None:
        for m, c in target33.terms.items():
            key = ("laplacian^3 F33", m)
            values[key] = values[key] - c if key in values else -c
    return values


def is_normal_form(
    F: DefiningSeries,
    t: NormalFormType = NormalFormType(),
    tol: float | None = None,
) -> tuple[bool, NormalFormReport]:
    """
    Check every weight of F − model against the normal-form conditions.

    Exact mode compares with zero; float mode with `tol` (default 1e−10
    relative to the largest coefficient).
    """
    if F.trunc < MIN_TRUNC:
        raise InsufficientTruncation(F.trunc, MIN_TRUNC)
    mode = F.mode
    model = log_model(F.sig, F.trunc, to_real(t.alpha, mode), mode)
    if F.weight_part(2) != model.weight_part(2) and not F.weight_part(2).close_to(model.weight_part(2), 1e-12):
        raise WeightTwoMismatch(F.weight_part(2))

    R = F - model
    if mode == CoefficientMode.EXACT:
        limit = 0.0
    else:
        limit = (1e-10 if tol is None else tol) * max(1.0, F.max_abs())
    beta = to_real(t.beta, mode)

    defects: list[DefectEntry] = []
    for weight in range(3, F.trunc + 1):
        target = quartic_target(R, weight, beta)
        values = condition_values(R.weight_part(weight), weight, target)
        by_label: dict[str, float] = {}
        for (label, _), c in values.items():
            size = abs(complex(c))
            if size > 0:
                by_label[label] = max(by_label.get(label, 0.0), size)
        for label, size in sorted(by_label.items()):
            if size > limit:
                defects.append(DefectEntry(weight, label, size))
    report = NormalFormReport(is_normal=not defects, defects=defects)
    if defects:
        logger.info(f"Series is not in normal form: {len(defects)} defects, first at weight {defects[0].weight}")
    return report.is_normal, report
