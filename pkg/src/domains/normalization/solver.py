from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.domains.group.models import GroupElement
from src.domains.normalization.errors import (
    InsufficientTruncation,
    SignatureFlipUnsupported,
    SingularWeightSystem,
    WeightTwoMismatch,
)
from src.domains.normalization.model_series import log_model
from src.domains.normalization.models import NormalFormType, NormalizationResult
from src.domains.normalization.predicate import MIN_TRUNC, condition_values, is_normal_form, quartic_target
from src.domains.normalization.projection import compositions
from src.domains.normalization.transform import transform_defining
from src.domains.scalars.gaussian import CoefficientMode, imag_unit, to_real, to_scalar
from src.domains.series.maps import MapSeries
from src.domains.series.models import Monomial, unit_index
from src.domains.series.series import DefiningSeries, Series
from src.services.errors import LinearSolveError
from src.services.linear_solve import LinearSolver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Unknown:
    """Real or imaginary part of one coefficient of f_{μ−1} (component alpha) or g_μ."""

    kind: str
    alpha: int
    zi: tuple[int, ...]
    j: int
    part: str


def holomorphic_monomials(n: int, weight: int) -> list[tuple[tuple[int, ...], int]]:
    """(I, j) with |I| + 2j = weight, for z^I w^j."""
    return [(zi, j) for j in range(weight // 2 + 1) for zi in compositions(weight - 2 * j, n)]


class Normalizer:
    """
    Normalizes a defining series to the normal form of a given type with a
    prescribed initial value σ.

    After the linear step F ↦ F_σ = transform(F, σ), each weight μ = 3..N
    solves one linear system for the coefficients of f_{μ−1} and g_μ: the
    weight-μ part of transform(F_σ, id, E) minus the model must satisfy the
    normal-form conditions, and at μ = 3, 4 the jets of E∘φ_σ must realize σ.
    """

    def __init__(
        self,
        F: DefiningSeries,
        sigma: GroupElement,
        target: NormalFormType = NormalFormType(),
        solver: LinearSolver | None = None,
        observer: Callable[[int, float], None] | None = None,
    ):
        if F.trunc < MIN_TRUNC:
            raise InsufficientTruncation(F.trunc, MIN_TRUNC)
        self.sigma = sigma.to_mode(F.mode)
        if self.sigma.mode != F.mode:
            logger.warning(f"|rho| = {sigma.rho} is not a rational square; normalizing in float mode")
            F = F.to_mode(self.sigma.mode)
        self.F = F
        self.sig = F.sig
        self.mode = F.mode
        self.N = F.trunc
        self.target = target
        self.solver = solver or LinearSolver()
        self.observer = observer
        if self.sigma.rho < 0 and not self.sig.admits_flip:
            raise SignatureFlipUnsupported(self.sig)

        self.model = log_model(self.sig, self.N, to_real(target.alpha, self.mode), self.mode)
        Q = Series.hermitian(self.sig, self.N, self.mode)
        if not F.weight_part(2).close_to(Q, 0.0 if self.mode == CoefficientMode.EXACT else 1e-12):
            raise WeightTwoMismatch(F.weight_part(2))
        self.beta = to_real(target.beta, self.mode)
        self.i = imag_unit(self.mode)

    # columns of the weight system

    def _unknowns(self, mu: int) -> list[Unknown]:
        out = []
        for alpha in range(self.sig.n):
            for zi, j in holomorphic_monomials(self.sig.n, mu - 1):
                out += [Unknown("f", alpha, zi, j, "re"), Unknown("f", alpha, zi, j, "im")]
        for zi, j in holomorphic_monomials(self.sig.n, mu):
            out += [Unknown("g", 0, zi, j, "re"), Unknown("g", 0, zi, j, "im")]
        return out

    def _column(self, unknown: Unknown, mu: int, P_powers: list[Series]) -> Series:
        """Weight-μ change of F* per unit value of the unknown."""
        sig, mode = self.sig, self.mode
        zero = (0,) * sig.n
        c = to_scalar(1, mode) if unknown.part == "re" else self.i
        base = Series(sig, mu, {Monomial(unknown.zi, zero, 0): c}, mode).mul(P_powers[unknown.j])
        if unknown.kind == "g":
            # Im g(z, u + iQ)
            return base.im()
        # −2 Re(ε_α z̄_α f_α(z, u + iQ))
        eps = sig.eps[unknown.alpha]
        X = Series.zbar(sig, unknown.alpha, mu, mode).mul(base).scale(eps)
        return (X + X.conj()).scale(-1).re()

    # system assembly

    def _rows(self, values_by_column: list[dict], affine: dict) -> tuple[list, list, list]:
        keys = set(affine)
        for values in values_by_column:
            keys.update(values)
        ordered = sorted(keys, key=lambda k: (k[0], k[1].sort_key()))
        zero = to_scalar(0, self.mode)
        rows, rhs = [], []
        for key in ordered:
            entries = [values.get(key, zero) for values in values_by_column]
            b = -affine.get(key, zero)
            rows.append([e.real for e in entries])
            rhs.append(b.real)
            rows.append([e.imag for e in entries])
            rhs.append(b.imag)
        return rows, rhs, ordered

    def _jet_rows(self, mu: int, unknowns: list[Unknown], g: Series) -> tuple[list, list]:
        rows, rhs = [], []
        index = {u: k for k, u in enumerate(unknowns)}
        zero_i = (0,) * self.sig.n
        width = len(unknowns)
        if mu == 3:
            # ∂f/∂w at 0 vanishes
            for alpha in range(self.sig.n):
                for part in ("re", "im"):
                    row = [0] * width
                    row[index[Unknown("f", alpha, zero_i, 1, part)]] = 1
                    rows.append(row)
                    rhs.append(0)
        elif mu == 4:
            # Re ∂²W/∂w² at 0 equals 2ρr: Re(e) = Re(Σ d_α (Ca)_α)/ρ
            Ca = self.sigma.C @ self.sigma.a
            total = to_scalar(0, self.mode)
            for alpha in range(self.sig.n):
                d = g.coeff(Monomial(unit_index(self.sig.n, alpha), zero_i, 1))
                total = total + d * Ca[alpha]
            row = [0] * width
            row[index[Unknown("g", 0, zero_i, 2, "re")]] = 1
            rows.append(row)
            rhs.append(total.real / self.sigma.rho)
        return rows, rhs

    def _solve(self, mu: int, rows: list, rhs: list) -> list:
        try:
            if self.mode == CoefficientMode.EXACT:
                return self.solver.solve_exact(
                    [[Fraction(v) for v in row] for row in rows], [Fraction(b) for b in rhs]
                )
            return list(self.solver.solve_float(np.array(rows, dtype=float), np.array(rhs, dtype=float), f"weight {mu}"))
        except LinearSolveError as e:
            raise SingularWeightSystem(mu, str(e)) from e

    # driver

    def run(self) -> NormalizationResult:
        sig, mode, N = self.sig, self.mode, self.N
        identity = GroupElement.identity(sig, mode)
        F_sigma = self.F if self.sigma.is_identity() else transform_defining(self.F, self.sigma)

        f = [Series.zero(sig, N, mode) for _ in range(sig.n)]
        g = Series.zero(sig, N, mode)
        P = Series.u(sig, N, mode) + Series.hermitian(sig, N, mode).scale(self.i)

        for mu in range(3, N + 1):
            started = time.perf_counter()
            high = MapSeries(sig, N, tuple(f), g)
            current = transform_defining(F_sigma, identity, high, trunc=mu)
            R = current - self.model.with_trunc(mu)
            target = quartic_target(R, mu, self.beta)
            affine = condition_values(R.weight_part(mu), mu, target)

            unknowns = self._unknowns(mu)
            P_powers = [Series.constant(sig, mu, 1, mode)]
            for _ in range(mu // 2):
                P_powers.append(P_powers[-1].mul(P.with_trunc(mu)))
            columns = [condition_values(self._column(unk, mu, P_powers), mu) for unk in unknowns]

            rows, rhs, _ = self._rows(columns, affine)
            jet_rows, jet_rhs = self._jet_rows(mu, unknowns, g)
            x = self._solve(mu, rows + jet_rows, rhs + jet_rhs)

            f_terms = [dict(part.terms) for part in f]
            g_terms = dict(g.terms)
            for unk, value in zip(unknowns, x):
                if not value:
                    continue
                coeff = to_scalar(value, mode) * (1 if unk.part == "re" else self.i)
                mon = Monomial(unk.zi, (0,) * sig.n, unk.j)
                bucket = f_terms[unk.alpha] if unk.kind == "f" else g_terms
                bucket[mon] = bucket.get(mon, to_scalar(0, mode)) + coeff
            f = [Series(sig, N, terms, mode) for terms in f_terms]
            g = Series(sig, N, g_terms, mode)

            elapsed = time.perf_counter() - started
            logger.info(f"Solved weight {mu}: {len(unknowns)} unknowns, {len(rows) + len(jet_rows)} rows in {elapsed:.3f}s")
            if self.observer is not None:
                self.observer(mu, elapsed)

        high = MapSeries(sig, N, tuple(f), g)
        output = transform_defining(F_sigma, identity, high)
        _, report = is_normal_form(output, self.target)
        residuals = {mu: 0.0 for mu in range(3, N + 1)}
        residuals.update(report.residuals())
        return NormalizationResult(self.sigma, high, output, residuals, self.target)


def normalize(
    F: DefiningSeries,
    sigma: GroupElement,
    target: NormalFormType = NormalFormType(),
    solver: LinearSolver | None = None,
    observer: Callable[[int, float], None] | None = None,
) -> NormalizationResult:
    return Normalizer(F, sigma, target, solver, observer).run()
