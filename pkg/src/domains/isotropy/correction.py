"""
Weight-(l+1) terms produced by a translation a of the isotropy group.

shift_part is the part of H_{l+1}(·; a) read off from F_l directly;
g_correction is the term G_{l+1} the normalization adds so that the
trace conditions hold again. G depends on a single real g for odd l and on
a vector κ for even l; both are fixed here by solving the trace condition
they are responsible for rather than through a closed-form constant.
"""

from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from src.domains.group.models import as_vector
from src.domains.isotropy.models import IsotropyContext
from src.domains.scalars.gaussian import CoefficientMode, imag_unit, to_scalar
from src.domains.series.series import DefiningSeries, Series
from src.services.linear_solve import LinearSolver


def _powers(base: Series, k: int) -> list[Series]:
    out = [Series.constant(base.sig, base.trunc, 1, base.mode)]
    for _ in range(k):
        out.append(out[-1].mul(base))
    return out


def _frame(ctx: IsotropyContext):
    sig, mode, cap = ctx.sig, ctx.mode, ctx.l + 1
    i = imag_unit(mode)
    Q = Series.hermitian(sig, cap, mode)
    u = Series.u(sig, cap, mode)
    return i, Q, u, u + Q.scale(i), u - Q.scale(i)


def shift_part(ctx: IsotropyContext, a: Sequence) -> DefiningSeries:
    """H_{l+1}(·; a) − G_{l+1}."""
    sig, mode, cap = ctx.sig, ctx.mode, ctx.l + 1
    a = as_vector(a, mode)
    i, Q, u, X, Y = _frame(ctx)
    F = ctx.F_l.with_trunc(cap)
    za = Series.inner_z_a(sig, a, cap, mode)
    az = Series.inner_a_z(sig, a, cap, mode)

    out = (za - az).scale(-2 * i).mul(F)
    for alpha in range(sig.n):
        dz = F.d_z(alpha).scale(a[alpha])
        dzb = F.d_zbar(alpha).scale(a[alpha].conjugate())
        # ∂F_st/∂z has type (s−1, t); s = 2 is the boundary case
        out = out + dz.filter(lambda m: m.type[0] >= 2).mul(X)
        out = out + dz.filter(lambda m: m.type[0] == 1).mul(Q).scale(2 * i)
        out = out + dzb.filter(lambda m: m.type[1] >= 2).mul(Y)
        out = out + dzb.filter(lambda m: m.type[1] == 1).mul(Q).scale(-2 * i)
    out = out + F.d_u().mul(za.mul(X) - az.mul(Y)).scale(i / 2)
    return DefiningSeries.from_series(out.weight_part(cap))


def g_term(ctx: IsotropyContext, g) -> DefiningSeries:
    """Odd l = 2k−1: g·Re[((k−1)⟨z,z⟩ + iu)(u + i⟨z,z⟩)^{k−1}]."""
    i, Q, u, X, _ = _frame(ctx)
    k = ctx.k
    inner = Q.scale(k - 1) + u.scale(i)
    return inner.mul(_powers(X, k - 1)[-1]).re().scale(to_scalar(g, ctx.mode).real)


def kappa_term(ctx: IsotropyContext, kappa: Sequence) -> DefiningSeries:
    """Even l = 2k: the ⟨κ,z⟩ display of G_{l+1}."""
    sig, mode, cap = ctx.sig, ctx.mode, ctx.l + 1
    i, Q, u, X, Y = _frame(ctx)
    k = ctx.k
    kz = Series.inner_a_z(sig, as_vector(kappa, mode), cap, mode)
    zk = kz.conj()
    Xp, Yp = _powers(X, k), _powers(Y, k)
    G = (
        kz.mul(Xp[k])
        + zk.mul(Yp[k])
        + Q.mul(zk).mul(Xp[k - 1]).scale(2 * i * k)
        - Q.mul(kz).mul(Yp[k - 1]).scale(2 * i * k)
        - zk.mul(Xp[k])
        - kz.mul(Yp[k])
    )
    return DefiningSeries.from_series(G)


def _fit(columns: list[Series], target: Series, mode: CoefficientMode, solver: LinearSolver) -> list:
    """Real x with Σ x_j·columns[j] = −target, matched coefficient by coefficient."""
    keys = set(target.terms)
    for col in columns:
        keys.update(col.terms)
    ordered = sorted(keys, key=lambda m: m.sort_key())
    zero = to_scalar(0, mode)
    rows, rhs = [], []
    for m in ordered:
        entries = [col.terms.get(m, zero) for col in columns]
        b = -target.terms.get(m, zero)
        rows += [[e.real for e in entries], [e.imag for e in entries]]
        rhs += [b.real, b.imag]
    if not rows:
        return [zero.real] * len(columns)
    if mode == CoefficientMode.EXACT:
        return solver.solve_exact([[Fraction(v) for v in row] for row in rows], [Fraction(b) for b in rhs])
    return list(solver.solve_float(np.array(rows, dtype=float), np.array(rhs, dtype=float), "isotropy correction"))


def solve_g(ctx: IsotropyContext, S: Series, solver: LinearSolver | None = None):
    """g making Δ³ of the (3,3) part of S + G vanish."""
    unit = g_term(ctx, 1).type_part(3, 3).laplacian(3)
    target = S.type_part(3, 3).laplacian(3)
    (g,) = _fit([unit], target, ctx.mode, solver or LinearSolver())
    return g


def solve_kappa(ctx: IsotropyContext, S: Series, solver: LinearSolver | None = None) -> np.ndarray:
    """κ making Δ² of the (2,3) part of S + G vanish."""
    n, mode = ctx.sig.n, ctx.mode
    i = imag_unit(mode)
    columns = []
    for alpha in range(n):
        for unit in (to_scalar(1, mode), i):
            kappa = [unit if beta == alpha else 0 for beta in range(n)]
            columns.append(kappa_term(ctx, kappa).type_part(2, 3).laplacian(2))
    x = _fit(columns, S.type_part(2, 3).laplacian(2), mode, solver or LinearSolver())
    return as_vector([to_scalar(x[2 * alpha], mode) + to_scalar(x[2 * alpha + 1], mode) * i for alpha in range(n)], mode)


def g_correction(ctx: IsotropyContext, a: Sequence, solver: LinearSolver | None = None) -> DefiningSeries:
    """G_{l+1}(·; a): types s = t for odd l, s = t ± 1 for even l."""
    S = shift_part(ctx, a)
    if ctx.l % 2:
        return g_term(ctx, solve_g(ctx, S, solver))
    return kappa_term(ctx, solve_kappa(ctx, S, solver))
