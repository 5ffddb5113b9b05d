from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.core.config.settings import settings
from src.domains.group.errors import InvalidGroupElement
from src.domains.scalars.errors import NotASquare
from src.domains.scalars.gaussian import CoefficientMode, is_rational_square, rational_sqrt, to_real, to_scalar
from src.domains.series.models import Signature

logger = logging.getLogger(__name__)


def as_vector(values, mode: CoefficientMode) -> np.ndarray:
    if mode == CoefficientMode.EXACT:
        return np.array([to_scalar(v, mode) for v in values], dtype=object)
    return np.array([complex(v) for v in values], dtype=complex)


def as_matrix(rows, mode: CoefficientMode) -> np.ndarray:
    if mode == CoefficientMode.EXACT:
        return np.array([[to_scalar(v, mode) for v in row] for row in rows], dtype=object)
    return np.array([[complex(v) for v in row] for row in rows], dtype=complex)


def identity_matrix(n: int, mode: CoefficientMode) -> np.ndarray:
    return as_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], mode)


def herm(sig: Signature, x, y):
    """⟨x,y⟩ = Σ ε_α x^α ȳ^α."""
    return sum((eps * x[alpha] * y[alpha].conjugate() for alpha, eps in enumerate(sig.eps)), start=0 * x[0])


def form_matrix(sig: Signature, mode: CoefficientMode) -> np.ndarray:
    return as_matrix([[sig.eps[i] if i == j else 0 for j in range(sig.n)] for i in range(sig.n)], mode)


def matrix_equal(x: np.ndarray, y: np.ndarray, mode: CoefficientMode, tol: float) -> bool:
    if mode == CoefficientMode.EXACT:
        return all(p == q for p, q in zip(x.flat, y.flat))
    return bool(np.max(np.abs(x - y), initial=0.0) <= tol)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """
    Element (U, a, ρ, r) of the isotropy group H.

    ⟨Uz,Uz⟩ = sign(ρ)·⟨z,z⟩ and C = √|ρ|·U. In exact mode entries are
    GaussianRational and ρ, r are Fractions; |ρ| must then be a rational
    square so that C stays exact. `build` falls back to float mode for any
    other ρ.
    """

    sig: Signature
    U: np.ndarray
    a: np.ndarray
    rho: Fraction | float
    r: Fraction | float
    mode: CoefficientMode = CoefficientMode.EXACT

    def __post_init__(self):
        n = self.sig.n
        if self.U.shape != (n, n) or self.a.shape != (n,):
            raise InvalidGroupElement(f"expected U of shape ({n},{n}) and a of length {n}")
        if self.rho == 0:
            raise InvalidGroupElement("rho must be nonzero")
        if self.mode == CoefficientMode.EXACT and not is_rational_square(abs(self.rho)):
            raise NotASquare(abs(self.rho))
        E = form_matrix(self.sig, self.mode)
        if not matrix_equal(self.U.conj().T @ E @ self.U, E * self.sign, self.mode, 1e3 * settings.REALITY_TOL):
            raise InvalidGroupElement("U does not satisfy <Uz,Uz> = sign(rho)<z,z>")

    @classmethod
    def build(cls, sig: Signature, U, a, rho, r, mode: CoefficientMode = CoefficientMode.EXACT) -> GroupElement:
        mode = CoefficientMode(mode)
        if mode == CoefficientMode.EXACT and not is_rational_square(abs(to_real(rho, mode))):
            logger.warning(f"|rho| = {rho} is not a rational square; building the element in float mode")
            mode = CoefficientMode.FLOAT
        return cls(sig, as_matrix(U, mode), as_vector(a, mode), to_real(rho, mode), to_real(r, mode), mode)

    @classmethod
    def identity(cls, sig: Signature, mode: CoefficientMode = CoefficientMode.EXACT) -> GroupElement:
        mode = CoefficientMode(mode)
        return cls(sig, identity_matrix(sig.n, mode), as_vector([0] * sig.n, mode), to_real(1, mode), to_real(0, mode), mode)

    @property
    def sign(self) -> int:
        return 1 if self.rho > 0 else -1

    @property
    def sqrt_abs_rho(self):
        if self.mode == CoefficientMode.EXACT:
            return rational_sqrt(abs(self.rho))
        return float(np.sqrt(abs(self.rho)))

    @property
    def C(self) -> np.ndarray:
        return self.U * self.sqrt_abs_rho

    def U_inv(self) -> np.ndarray:
        """U⁻¹ = sign(ρ)·E·U*·E."""
        E = form_matrix(self.sig, self.mode)
        return (E @ self.U.conj().T @ E) * self.sign

    def C_inv(self) -> np.ndarray:
        return self.U_inv() * (1 / to_scalar(self.sqrt_abs_rho, self.mode))

    def is_identity(self, tol: float = 0.0) -> bool:
        return self.equals(GroupElement.identity(self.sig, self.mode), tol)

    def to_mode(self, mode: CoefficientMode) -> GroupElement:
        mode = CoefficientMode(mode)
        if mode == self.mode:
            return self
        return GroupElement.build(self.sig, self.U.tolist(), list(self.a), self.rho, self.r, mode)

    def equals(self, other: GroupElement, tol: float = 1e-10) -> bool:
        if self.sig != other.sig:
            return False
        mode = self.mode if self.mode == other.mode else CoefficientMode.FLOAT
        x, y = self.to_mode(mode), other.to_mode(mode)
        if mode == CoefficientMode.EXACT:
            return (
                matrix_equal(x.U, y.U, mode, 0)
                and matrix_equal(x.a, y.a, mode, 0)
                and x.rho == y.rho
                and x.r == y.r
            )
        return (
            matrix_equal(x.U, y.U, mode, tol)
            and matrix_equal(x.a, y.a, mode, tol)
            and abs(x.rho - y.rho) <= tol
            and abs(x.r - y.r) <= tol
        )

    def __repr__(self) -> str:
        return f"GroupElement(U={self.U.tolist()}, a={self.a.tolist()}, rho={self.rho}, r={self.r})"


@dataclass(frozen=True, eq=False)
class AffineElement:
    """z* = z + b, w* = w + 2i⟨z,b⟩ + c + i⟨b,b⟩."""

    sig: Signature
    b: np.ndarray
    c: Fraction | float
    mode: CoefficientMode = CoefficientMode.FLOAT
