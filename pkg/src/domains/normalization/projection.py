from fractions import Fraction

import numpy as np

from src.domains.scalars.gaussian import CoefficientMode, GaussianRational
from src.domains.series.models import Monomial, Signature
from src.domains.series.series import DefiningSeries, Series


def project_to_normal_form(F: DefiningSeries) -> DefiningSeries:
    """
    Chern–Moser normal form obtained by removing traces in closed form.

    Types with min(s,t) ≤ 1 are dropped (the weight-2 ⟨z,z⟩ is kept), and
    F₂₂, F₂₃, F₃₂, F₃₃ lose their trace parts:
    F₂₂ − Q·(T/(n+2) − Q·ΔT/(2(n+1)(n+2))) with T = ΔF₂₂,
    F₂₃ − Q²·Δ²F₂₃/(2(n+1)(n+2)),
    F₃₃ − Q³·Δ³F₃₃/(6n(n+1)(n+2)).
    """
    n = F.sig.n
    Q = Series.hermitian(F.sig, F.trunc, F.mode)
    Q2 = Q.mul(Q)
    Q3 = Q2.mul(Q)

    high = F.filter(lambda m: min(m.type) >= 2)
    F22 = high.type_part(2, 2)
    T = F22.laplacian()
    fix22 = Q.mul(T.scale(_q(1, n + 2, F.mode)) - Q.mul(T.laplacian()).scale(_q(1, 2 * (n + 1) * (n + 2), F.mode)))

    fix23 = Q2.mul(high.type_part(2, 3).laplacian(2)).scale(_q(1, 2 * (n + 1) * (n + 2), F.mode))
    fix32 = Q2.mul(high.type_part(3, 2).laplacian(2)).scale(_q(1, 2 * (n + 1) * (n + 2), F.mode))
    fix33 = Q3.mul(high.type_part(3, 3).laplacian(3)).scale(_q(1, 6 * n * (n + 1) * (n + 2), F.mode))

    return (Q + high - fix22 - fix23 - fix32 - fix33).re()


def _q(p: int, q: int, mode: CoefficientMode):
    return Fraction(p, q) if mode == CoefficientMode.EXACT else p / q


def random_normal_form(
    sig: Signature,
    trunc: int,
    rng: np.random.Generator,
    mode: CoefficientMode = CoefficientMode.FLOAT,
    min_weight: int = 4,
    max_weight: int | None = None,
    scale: float = 1.0,
    den: int = 4,
) -> DefiningSeries:
    """
    ⟨z,z⟩ plus a random real perturbation of weights min_weight..max_weight,
    projected to Chern–Moser normal form.
    """
    max_weight = trunc if max_weight is None else max_weight
    terms: dict = {}
    for m in monomials(sig.n, min_weight, max_weight):
        if min(m.type) < 2 or m.type[0] > m.type[1]:
            continue
        if mode == CoefficientMode.EXACT:
            re, im = (Fraction(int(k), den) for k in rng.integers(-den, den + 1, size=2))
            terms[m] = GaussianRational(re, im) * Fraction(scale)
        else:
            terms[m] = complex(rng.normal(0, scale), rng.normal(0, scale))
    raw = Series(sig, trunc, terms, mode)
    # raw + conj(raw) is real; mirrored diagonal terms double their real part
    return project_to_normal_form((Series.hermitian(sig, trunc, mode) + raw + raw.conj()).re())


def monomials(n: int, min_weight: int, max_weight: int):
    """All monomials z^I z̄^J u^l with weight in [min_weight, max_weight]."""
    for weight in range(min_weight, max_weight + 1):
        for l in range(weight // 2 + 1):
            rest = weight - 2 * l
            for s in range(rest + 1):
                for zi in compositions(s, n):
                    for zj in compositions(rest - s, n):
                        yield Monomial(zi, zj, l)


def compositions(total: int, parts: int):
    """Tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail
