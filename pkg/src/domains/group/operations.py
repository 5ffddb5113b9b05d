import logging
from fractions import Fraction

import numpy as np
import sympy

from src.core.config.settings import settings
from src.domains.group.errors import IndeterminatePoint, InvalidGroupElement, LeftGroup
from src.domains.group.models import (
    AffineElement,
    GroupElement,
    as_matrix,
    as_vector,
    form_matrix,
    herm,
)
from src.domains.scalars.gaussian import (
    CoefficientMode,
    GaussianRational,
    imag_unit,
    rational_sqrt,
    to_real,
    to_scalar,
)
from src.domains.series.models import Signature

logger = logging.getLogger(__name__)


def to_matrix(sigma: GroupElement) -> np.ndarray:
    """
    (n+2)×(n+2) matrix acting on homogeneous coordinates (w, z, 1).

    Rows: (ρ, 0, 0), (−Ca, C, 0), (−r − i⟨a,a⟩, 2i·a†, 1) with
    a† = (ε_α ā^α).
    """
    n, mode = sigma.sig.n, sigma.mode
    i = imag_unit(mode)
    zero = to_scalar(0, mode)
    one = to_scalar(1, mode)
    C = sigma.C
    M = as_matrix([[zero] * (n + 2) for _ in range(n + 2)], mode)
    M[0, 0] = to_scalar(sigma.rho, mode)
    M[1 : n + 1, 0] = -(C @ sigma.a)
    M[1 : n + 1, 1 : n + 1] = C
    M[n + 1, 0] = -to_scalar(sigma.r, mode) - i * herm(sigma.sig, sigma.a, sigma.a)
    for alpha, eps in enumerate(sigma.sig.eps):
        M[n + 1, 1 + alpha] = 2 * i * eps * sigma.a[alpha].conjugate()
    M[n + 1, n + 1] = one
    return M


def from_matrix(M: np.ndarray, sig: Signature, mode: CoefficientMode, tol: float = 1e-9) -> GroupElement:
    """Read (U, a, ρ, r) back from a matrix after scaling its last entry to 1."""
    n = sig.n
    corner = M[n + 1, n + 1]
    if (abs(complex(corner)) <= tol) if mode == CoefficientMode.FLOAT else not corner:
        raise LeftGroup("bottom-right entry vanishes")
    M = M * (1 / corner)

    def small(x) -> bool:
        return abs(complex(x)) <= tol if mode == CoefficientMode.FLOAT else not x

    if not all(small(x) for x in M[0, 1:]) or not all(small(x) for x in M[1 : n + 1, n + 1]):
        raise LeftGroup("first row or last column is not of the block pattern")
    rho_c = M[0, 0]
    if not small(rho_c.imag):
        raise LeftGroup("rho is not real")
    rho = to_real(rho_c, mode)

    sign = 1 if rho > 0 else -1
    root = rational_sqrt(abs(rho)) if mode == CoefficientMode.EXACT else float(np.sqrt(abs(rho)))
    inv_root = 1 / to_scalar(root, mode)
    U = M[1 : n + 1, 1 : n + 1] * inv_root
    E = form_matrix(sig, mode)
    U_inv = (E @ U.conj().T @ E) * sign
    a = -(U_inv @ M[1 : n + 1, 0]) * inv_root

    i = imag_unit(mode)
    r_c = -M[n + 1, 0] - i * herm(sig, a, a)
    if not small(r_c.imag):
        raise LeftGroup("r is not real")
    for alpha, eps in enumerate(sig.eps):
        if not small(M[n + 1, 1 + alpha] - 2 * i * eps * a[alpha].conjugate()):
            raise LeftGroup("last row does not match 2i·a†")
    return GroupElement(sig, U, a, rho, to_real(r_c, mode), mode)


def compose(s1: GroupElement, s2: GroupElement) -> GroupElement:
    """φ_{σ₁σ₂} = φ_{σ₁} ∘ φ_{σ₂}."""
    if s1.sig != s2.sig:
        raise LeftGroup(f"signatures {s1.sig} and {s2.sig} differ")
    mode = s1.mode if s1.mode == s2.mode else CoefficientMode.FLOAT
    s1, s2 = s1.to_mode(mode), s2.to_mode(mode)
    return from_matrix(to_matrix(s1) @ to_matrix(s2), s1.sig, mode)


def invert(sigma: GroupElement) -> GroupElement:
    """(U⁻¹, −ρ⁻¹Ca, ρ⁻¹, −rρ⁻¹)."""
    mode = sigma.mode
    rho_inv = to_real(1, mode) / sigma.rho
    a = -(sigma.C @ sigma.a) * to_scalar(rho_inv, mode)
    return GroupElement(sigma.sig, sigma.U_inv(), a, rho_inv, -sigma.r * rho_inv, mode)


def apply(sigma: GroupElement, z, w):
    """z* = C(z − aw)/D, w* = ρw/D with D = 1 + 2i⟨z,a⟩ − w(r + i⟨a,a⟩)."""
    mode = sigma.mode
    z = as_vector(z, mode)
    w = to_scalar(w, mode)
    i = imag_unit(mode)
    D = 1 + 2 * i * herm(sigma.sig, z, sigma.a) - w * (to_scalar(sigma.r, mode) + i * herm(sigma.sig, sigma.a, sigma.a))
    if (abs(complex(D)) < settings.SINGULARITY_TOL) if mode == CoefficientMode.FLOAT else not D:
        raise IndeterminatePoint((z.tolist(), w), D)
    z_star = (sigma.C @ (z - sigma.a * w)) * (1 / D)
    return z_star, to_scalar(sigma.rho, mode) * w / D


def conjugate_normal_part(sigma: GroupElement, a_prime, r_prime):
    """
    Translation parameters (a*, r*) of τ·σ·τ⁻¹ with τ = (I, a′, 1, r′):

    a* = ρC⁻¹a′ + a − a′ and
    r* = ρr′ − r′ + r + i⟨C(a−a′),a′⟩ − i⟨a′,C(a−a′)⟩ + i⟨a,a′⟩ − i⟨a′,a⟩.
    """
    mode, sig = sigma.mode, sigma.sig
    i = imag_unit(mode)
    ap = as_vector(a_prime, mode)
    rp = to_real(r_prime, mode)
    a_star = (sigma.C_inv() @ ap) * to_scalar(sigma.rho, mode) + sigma.a - ap
    d = sigma.C @ (sigma.a - ap)
    r_c = (
        to_scalar(sigma.rho * rp - rp + sigma.r, mode)
        + i * herm(sig, d, ap)
        - i * herm(sig, ap, d)
        + i * herm(sig, sigma.a, ap)
        - i * herm(sig, ap, sigma.a)
    )
    return a_star, to_real(r_c, mode)


def apply_affine(e: AffineElement, z, w):
    mode = e.mode
    z = as_vector(z, mode)
    w = to_scalar(w, mode)
    i = imag_unit(mode)
    w_star = w + 2 * i * herm(e.sig, z, e.b) + to_scalar(e.c, mode) + i * herm(e.sig, e.b, e.b)
    return z + e.b, w_star


def affine_to_origin(sig: Signature, kappa, chi, mode: CoefficientMode = CoefficientMode.FLOAT) -> AffineElement:
    """Affine automorphism b = −κ, c = −Re χ, sending the hyperquadric point (κ, χ) to 0."""
    kappa = as_vector(kappa, mode)
    chi = to_scalar(chi, mode)
    return AffineElement(sig, -kappa, to_real(-chi.real, mode), mode)


def on_hyperquadric_residue(sig: Signature, z, w) -> float:
    return abs(complex(w).imag - complex(herm(sig, as_vector(z, CoefficientMode.FLOAT), as_vector(z, CoefficientMode.FLOAT))).real)


# sampling


def _random_rational(rng: np.random.Generator, lo: float, hi: float, den: int = 4) -> Fraction:
    return Fraction(int(rng.integers(int(lo * den), int(hi * den) + 1)), den)


def _block_flip(sig: Signature) -> list[list[int]]:
    """Permutation exchanging the +1 and −1 blocks; requires e = n/2."""
    n, e = sig.n, sig.e
    P = [[0] * n for _ in range(n)]
    for alpha in range(e):
        P[alpha][e + alpha] = 1
        P[e + alpha][alpha] = 1
    return P


CAYLEY_ATTEMPTS = 64
MIN_CAYLEY_DET = sympy.Rational(1, 16)


def _cayley_parameter(sig: Signature, rng: np.random.Generator) -> list[list[tuple[Fraction, Fraction]]]:
    """X = E·K with K skew-Hermitian, so that X*E + EX = 0."""
    n = sig.n
    eps = sig.eps
    K = [[0] * n for _ in range(n)]
    for p in range(n):
        K[p][p] = (0, _random_rational(rng, -1, 1))
        for q in range(p + 1, n):
            re, im = _random_rational(rng, -1, 1), _random_rational(rng, -1, 1)
            K[p][q] = (re, im)
            K[q][p] = (-re, im)
    return [[(eps[p] * K[p][q][0], eps[p] * K[p][q][1]) if K[p][q] else (0, 0) for q in range(n)] for p in range(n)]


def random_unitary(sig: Signature, rng: np.random.Generator, mode: CoefficientMode, flip: bool = False) -> np.ndarray:
    """
    Form-preserving U from the Cayley transform (I − X)⁻¹(I + X) of X = E·K,
    K skew-Hermitian; exact mode inverts with rational arithmetic.

    For an indefinite form I − X can be singular, so X is redrawn until
    |det(I − X)| ≥ 1/16. A definite form always accepts the first draw.
    """
    n = sig.n
    for _ in range(CAYLEY_ATTEMPTS):
        X = _cayley_parameter(sig, rng)
        Xs = sympy.Matrix(n, n, lambda p, q: sympy.Rational(X[p][q][0]) + sympy.I * sympy.Rational(X[p][q][1]))
        re, im = sympy.expand((sympy.eye(n) - Xs).det()).as_real_imag()
        if re**2 + im**2 >= MIN_CAYLEY_DET**2:
            break
    else:
        raise InvalidGroupElement(f"no Cayley parameter with |det(I - X)| >= {MIN_CAYLEY_DET} in {CAYLEY_ATTEMPTS} draws")

    if mode == CoefficientMode.EXACT:
        Us = (sympy.eye(n) - Xs).inv() * (sympy.eye(n) + Xs)
        if flip:
            Us = sympy.Matrix(_block_flip(sig)) * Us
        rows = []
        for p in range(n):
            row = []
            for q in range(n):
                entry = sympy.expand(sympy.radsimp(Us[p, q]))
                re, im = (sympy.Rational(part) for part in entry.as_real_imag())
                row.append(GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q))))
            rows.append(row)
        return as_matrix(rows, mode)

    Xf = np.array([[complex(float(x[0]), float(x[1])) for x in row] for row in X])
    I = np.eye(n)
    U = np.linalg.solve(I - Xf, I + Xf)
    if flip:
        U = np.array(_block_flip(sig), dtype=complex) @ U
    return U


def random_element(
    sig: Signature,
    rng: np.random.Generator,
    mode: CoefficientMode = CoefficientMode.FLOAT,
    negative_rho: bool = False,
    scale: float = 1.0,
) -> GroupElement:
    """
    Random group element for property checks.

    a and r are drawn in [−scale, scale]; |ρ| in [1/2, 2], an exact rational
    square in exact mode. A negative ρ needs a signature with e = n/2.
    """
    mode = CoefficientMode(mode)
    flip = negative_rho and sig.admits_flip
    U = random_unitary(sig, rng, mode, flip=flip)
    if mode == CoefficientMode.EXACT:
        root = Fraction(int(rng.integers(3, 6)), 4)
        rho = root * root
        a = [GaussianRational(_random_rational(rng, -scale, scale), _random_rational(rng, -scale, scale)) for _ in range(sig.n)]
        r = _random_rational(rng, -scale, scale)
    else:
        rho = float(rng.uniform(0.5, 2.0))
        a = list(rng.uniform(-scale, scale, sig.n) + 1j * rng.uniform(-scale, scale, sig.n))
        r = float(rng.uniform(-scale, scale))
    if flip:
        rho = -rho
    return GroupElement(sig, U, as_vector(a, mode), to_real(rho, mode), to_real(r, mode), mode)
