"""
Transformation of defining series under E∘φ_σ.

A point of v = F(z, z̄, u) is parametrized by (z, z̄, u) with w = u + iF.
Pushing it through the map gives series Z, W in (z, z̄, u); the new defining
series F* is then recovered weight by weight from Im W = F*(Z, Z̄, Re W).
"""

import logging
from collections.abc import Sequence

from src.domains.group.models import GroupElement, herm
from src.domains.normalization.errors import NonInvertibleLinearPart
from src.domains.normalization.models import TotalMap
from src.domains.scalars.gaussian import imag_unit, to_scalar
from src.domains.series.maps import MapSeries
from src.domains.series.models import Signature
from src.domains.series.series import DefiningSeries, Series

logger = logging.getLogger(__name__)


def validate_high(high: MapSeries) -> None:
    for alpha, part in enumerate(high.f):
        if not part.is_holomorphic():
            raise NonInvertibleLinearPart(f"f[{alpha}] depends on conjugate variables")
        if any(m.weight < 2 for m in part.terms):
            raise NonInvertibleLinearPart(f"f[{alpha}] has terms below weight 2")
    if not high.g.is_holomorphic():
        raise NonInvertibleLinearPart("g depends on conjugate variables")
    if any(m.weight < 3 for m in high.g.terms):
        raise NonInvertibleLinearPart("g has terms below weight 3")


def variables(sig: Signature, cap: int, mode) -> list[Series]:
    return [Series.z(sig, alpha, cap, mode) for alpha in range(sig.n)]


def phi_sigma(sigma: GroupElement, zs: Sequence[Series], w: Series, cap: int) -> tuple[list[Series], Series]:
    """z′ = C(z − aw)/D, w′ = ρw/D with D = 1 + 2i⟨z,a⟩ − w(r + i⟨a,a⟩), 1/D expanded geometrically."""
    if sigma.is_identity():
        return list(zs), w
    sig, mode = sigma.sig, sigma.mode
    i = imag_unit(mode)
    one = Series.constant(sig, cap, 1, mode)

    za = sum(zs[alpha].scale(eps * sigma.a[alpha].conjugate()) for alpha, eps in enumerate(sig.eps))
    D = one + za.scale(2 * i) - w.scale(to_scalar(sigma.r, mode) + i * herm(sig, sigma.a, sigma.a))
    delta = one - D
    inverse, power = one, one
    for _ in range(cap):
        power = power.mul(delta, cap)
        if power.is_zero:
            break
        inverse = inverse + power

    C = sigma.C
    shifted = [zs[beta] - w.scale(sigma.a[beta]) for beta in range(sig.n)]
    z_new = [
        sum(shifted[beta].scale(C[alpha, beta]) for beta in range(sig.n)).mul(inverse, cap)
        for alpha in range(sig.n)
    ]
    w_new = w.scale(to_scalar(sigma.rho, mode)).mul(inverse, cap)
    return z_new, w_new


def apply_map(
    sigma: GroupElement,
    high: MapSeries | None,
    zs: Sequence[Series],
    w: Series,
    cap: int,
) -> tuple[list[Series], Series]:
    z_new, w_new = phi_sigma(sigma, zs, w, cap)
    if high is None or high.is_identity():
        return z_new, w_new
    Z = [
        z_new[alpha] + high.f[alpha].compose(z_new, None, w_new, cap) if high.f[alpha].terms else z_new[alpha]
        for alpha in range(sigma.sig.n)
    ]
    W = w_new + high.g.compose(z_new, None, w_new, cap) if high.g.terms else w_new
    return Z, W


def transform_defining(
    F: DefiningSeries,
    sigma: GroupElement,
    high: MapSeries | None = None,
    trunc: int | None = None,
) -> DefiningSeries:
    """
    Defining series F* of the image of v = F under E∘φ_σ, through weight trunc.

    Writing Λ for the linear part (z, u) ↦ (Cz, ρu), the weight-μ part is
    F*_μ = [V − Σ_{ν<μ} F*_ν(Z, Z̄, U)]_μ ∘ Λ⁻¹.
    """
    sig, mode = F.sig, F.mode
    cap = F.trunc if trunc is None else min(trunc, F.trunc)
    sigma = sigma.to_mode(mode)
    if sigma.mode != mode:
        # no exact C for a non-square |ρ|
        F, mode = F.to_mode(sigma.mode), sigma.mode
    if high is not None:
        validate_high(high)
    i = imag_unit(mode)

    zs = variables(sig, cap, mode)
    w = Series.u(sig, cap, mode) + F.with_trunc(cap).scale(i)
    Z, W = apply_map(sigma, high, zs, w, cap)
    Z_bar = [part.conj() for part in Z]
    U, V = W.re(), W.im()

    linear_identity = sigma.is_identity()
    if not linear_identity:
        C_inv = sigma.C_inv()
        lin_z = [
            sum(zs[beta].scale(C_inv[alpha, beta]) for beta in range(sig.n))
            for alpha in range(sig.n)
        ]
        lin_zbar = [part.conj() for part in lin_z]
        lin_u = Series.u(sig, cap, mode).scale(1 / to_scalar(sigma.rho, mode))

    out = DefiningSeries(sig, cap, {}, mode)
    acc = Series.zero(sig, cap, mode)
    for mu in range(cap + 1):
        X = (V - acc).weight_part(mu)
        if X.is_zero:
            continue
        F_mu = X.re() if linear_identity else X.compose(lin_z, lin_zbar, lin_u, cap).re()
        out = out + F_mu
        if mu < cap:
            acc = acc + F_mu.compose(Z, Z_bar, U, cap)
    return out


def total_map(sigma: GroupElement, high: MapSeries | None, trunc: int) -> TotalMap:
    """Φ = E∘φ_σ as holomorphic series in (z, w)."""
    mode = sigma.mode if high is None else high.mode
    sigma = sigma.to_mode(mode)
    zs = variables(sigma.sig, trunc, mode)
    w = Series.u(sigma.sig, trunc, mode)
    Z, W = apply_map(sigma, high, zs, w, trunc)
    return TotalMap(sigma.sig, trunc, tuple(Z), W)


def compose_total(outer: TotalMap, inner: TotalMap) -> TotalMap:
    """outer ∘ inner through the smaller truncation."""
    cap = min(outer.trunc, inner.trunc)
    Z = tuple(part.compose(inner.Z, None, inner.W, cap) for part in outer.Z)
    W = outer.W.compose(inner.Z, None, inner.W, cap)
    return TotalMap(outer.sig, cap, Z, W)
