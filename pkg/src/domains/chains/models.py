from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from src.domains.series.models import Signature


def herm_c(sig: Signature, x: np.ndarray, y: np.ndarray) -> complex:
    """⟨x,y⟩ = Σ ε_α x^α ȳ^α for complex vectors."""
    return complex(np.sum(np.asarray(sig.eps) * x * np.conj(y)))


@dataclass(frozen=True)
class ChainState:
    """(p, p′, u) for a chain z = p(u), w = u + i⟨p(u),p(u)⟩."""

    p: np.ndarray
    dp: np.ndarray
    u: float

    @classmethod
    def of(cls, p, dp, u: float = 0.0) -> ChainState:
        return cls(np.asarray(p, dtype=complex), np.asarray(dp, dtype=complex), float(u))

    def point(self, sig: Signature) -> tuple[np.ndarray, complex]:
        return self.p, complex(self.u, herm_c(sig, self.p, self.p))

    def velocity(self, sig: Signature) -> tuple[np.ndarray, complex]:
        """(p′, w′) with w′ = 1 + i(⟨p′,p⟩ + ⟨p,p′⟩)."""
        return self.dp, 1 + 1j * (herm_c(sig, self.dp, self.p) + herm_c(sig, self.p, self.dp))

    def echo(self) -> dict:
        return {"p": [str(x) for x in self.p], "dp": [str(x) for x in self.dp], "u": self.u}

    def __str__(self) -> str:
        return f"(p={self.p.tolist()}, p'={self.dp.tolist()}, u={self.u})"


@dataclass
class ChainTrajectory:
    """Sampled chain with the distance of each point from the initial complex line."""

    sig: Signature
    u: np.ndarray
    z: np.ndarray
    w: np.ndarray
    line_defect: np.ndarray

    def header(self) -> list[str]:
        n = self.sig.n
        return (
            ["u"]
            + [f"re_z{alpha + 1}" for alpha in range(n)]
            + [f"im_z{alpha + 1}" for alpha in range(n)]
            + ["re_w", "im_w", "line_defect"]
        )

    def rows(self) -> list[list[float]]:
        out = []
        for k in range(len(self.u)):
            z = self.z[k]
            out.append(
                [float(self.u[k])]
                + [float(x.real) for x in z]
                + [float(x.imag) for x in z]
                + [float(self.w[k].real), float(self.w[k].imag), float(self.line_defect[k])]
            )
        return out


@dataclass(frozen=True)
class MobiusQ:
    """
    e^{2αiq(u)} = e^{iλ}(e^{2αiu} + κ)/(1 + κ̄e^{2αiu}) with q(0) = 0.

    sign = +1 for |κ| < 1 and −1 for |κ| > 1; it is the sign of q′.
    """

    alpha: float
    lam: float
    kappa: complex
    sign: int

    def q(self, u: float) -> float:
        x = cmath.exp(2j * self.alpha * u)
        if self.sign > 0:
            return u + (cmath.phase(1 + self.kappa / x) - cmath.phase(1 + self.kappa)) / self.alpha
        return -u + (cmath.phase(1 + x / self.kappa) - cmath.phase(1 + 1 / self.kappa)) / self.alpha

    def _parts(self, u: float) -> tuple[complex, complex, complex]:
        x = cmath.exp(2j * self.alpha * u)
        return x, 1 / (x + self.kappa), 1 / (1 + self.kappa.conjugate() * x)

    def dq(self, u: float) -> float:
        _, g1, g2 = self._parts(u)
        return (-self.kappa * g1 + g2).real

    def d2q(self, u: float) -> float:
        x, g1, g2 = self._parts(u)
        k, kb = self.kappa, self.kappa.conjugate()
        return (2j * self.alpha * x * (k * g1**2 - kb * g2**2)).real

    def d3q(self, u: float) -> float:
        x, g1, g2 = self._parts(u)
        k, kb = self.kappa, self.kappa.conjugate()
        bracket = k * g1**2 - kb * g2**2 - 2 * k * x * g1**3 + 2 * kb**2 * x * g2**3
        return ((2j * self.alpha) ** 2 * x * bracket).real
