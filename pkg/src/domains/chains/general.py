"""
Coefficient matrices A₁, A₂ of the chain equation p″ = Q(u, p, p̄, p′, p̄′)
on a general hypersurface v = F(z, z̄, u).

Q = (A₁ − A₂Ā₁⁻¹Ā₂)⁻¹(B − A₂Ā₁⁻¹B̄) also needs the vector B, which is only
known structurally; this module stops at A₁ and A₂. Following the source
display, F″ denotes ½∂²F/∂u².
"""

from dataclasses import dataclass

import numpy as np

from src.domains.chains.errors import ExperimentalFeatureDisabled
from src.domains.series.series import DefiningSeries


@dataclass(frozen=True)
class SurfaceJet:
    """Derivatives of F at (p, p̄, u) entering A₁ and A₂."""

    F_z: np.ndarray
    F_zb: np.ndarray
    F_u: complex
    F_uu_half: complex
    F_zu: np.ndarray
    F_zbu: np.ndarray
    F_zzb: np.ndarray  # [β, α] = ∂²F/∂z^β∂z̄^α

    @classmethod
    def of(cls, F: DefiningSeries, p, u: float) -> "SurfaceJet":
        n = F.sig.n
        p = [complex(x) for x in p]

        def at(series) -> complex:
            return series.evaluate(p, u)

        F_u = F.d_u()
        return cls(
            F_z=np.array([at(F.d_z(a)) for a in range(n)]),
            F_zb=np.array([at(F.d_zbar(a)) for a in range(n)]),
            F_u=at(F_u),
            F_uu_half=0.5 * at(F_u.d_u()),
            F_zu=np.array([at(F_u.d_z(a)) for a in range(n)]),
            F_zbu=np.array([at(F_u.d_zbar(a)) for a in range(n)]),
            F_zzb=np.array([[at(F.d_z(b).d_zbar(a)) for a in range(n)] for b in range(n)]),
        )


def chain_matrices(F: DefiningSeries, p, dp, u: float, experimental: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """(A₁, A₂) at (u, p, p′) as n×n complex matrices, indexed [α, β]."""
    if not experimental:
        raise ExperimentalFeatureDisabled("chain_matrices")
    j = SurfaceJet.of(F, p, u)
    dp = np.asarray(dp, dtype=complex)
    n = F.sig.n
    plus, minus = 1 + 1j * j.F_u, 1 - 1j * j.F_u
    Fz_dp = np.dot(j.F_z, dp)
    Fzb_dpb = np.dot(j.F_zb, np.conj(dp))

    common = 1 - 1j * plus * Fz_dp + 1j * minus * Fzb_dpb + j.F_u**2
    inner = np.dot(j.F_zu, dp) + 1j * j.F_uu_half * Fz_dp + 1j * j.F_uu_half * Fzb_dpb
    T = np.array(
        [
            2j * np.dot(j.F_zzb[:, alpha], dp)
            + 2 * j.F_uu_half * j.F_zb[alpha]
            + 1j * plus * j.F_zbu[alpha]
            + 2 / plus * j.F_zb[alpha] * inner
            for alpha in range(n)
        ]
    )

    A1 = np.empty((n, n), dtype=complex)
    A2 = np.empty((n, n), dtype=complex)
    for alpha in range(n):
        for beta in range(n):
            lead = 2j * j.F_zzb[beta, alpha] + 2 / plus * (j.F_zu[beta] + 1j * j.F_uu_half * j.F_z[beta]) * j.F_zb[alpha]
            A1[alpha, beta] = lead * common - 1j * plus * j.F_z[beta] * T[alpha]
            A2[alpha, beta] = (
                2j * j.F_uu_half / plus * j.F_zb[alpha] * j.F_zb[beta] * common
                + 1j * minus * j.F_zb[beta] * T[alpha]
            )
    return A1, A2
