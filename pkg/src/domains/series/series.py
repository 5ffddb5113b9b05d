from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence

from src.core.config.settings import settings
from src.domains.scalars.gaussian import CoefficientMode, imag_unit, to_scalar
from src.domains.series.errors import ModeMismatch, RealityViolation, SignatureMismatch
from src.domains.series.models import DecomposeMode, Monomial, Signature, unit_index


def _is_real_scalar(c) -> bool:
    return not getattr(c, "imag", 0)


class Series:
    """
    Truncated formal power series in (z, z̄, u) with complex coefficients.

    Terms are a dict Monomial → coefficient holding no zeros and no monomial
    of weight above `trunc`. Coefficients are GaussianRational in exact mode
    and complex in float mode. Instances are never mutated after
    construction.

    Holomorphic series in (z, w) use the same class with every zj = 0 and
    the u slot standing for w; the weight grading is the same.
    """

    __slots__ = ("sig", "trunc", "mode", "terms", "_grouped")

    def __init__(
        self,
        sig: Signature,
        trunc: int,
        terms: dict | None = None,
        mode: CoefficientMode = CoefficientMode.EXACT,
    ):
        self.sig = sig
        self.trunc = trunc
        self.mode = CoefficientMode(mode)
        self._grouped = None
        clean = {}
        for key, c in (terms or {}).items():
            mon = key if isinstance(key, Monomial) else Monomial(tuple(key[0]), tuple(key[1]), int(key[2]))
            if mon.weight > trunc:
                continue
            c = to_scalar(c, self.mode)
            if c:
                clean[mon] = c
        self.terms = clean

    # construction

    def _spawn(self, terms: dict, trunc: int | None = None, real: bool = False) -> Series:
        cls = DefiningSeries if real else Series
        obj = cls.__new__(cls)
        obj.sig = self.sig
        obj.trunc = self.trunc if trunc is None else trunc
        obj.mode = self.mode
        obj.terms = terms
        obj._grouped = None
        return obj

    @classmethod
    def zero(cls, sig: Signature, trunc: int, mode: CoefficientMode = CoefficientMode.EXACT) -> Series:
        return cls(sig, trunc, {}, mode)

    @classmethod
    def constant(cls, sig: Signature, trunc: int, c, mode: CoefficientMode = CoefficientMode.EXACT) -> Series:
        return cls(sig, trunc, {Monomial.one(sig.n): c}, mode)

    @classmethod
    def monomial(cls, sig: Signature, trunc: int, zi, zj, l: int, c=1, mode=CoefficientMode.EXACT) -> Series:
        return cls(sig, trunc, {Monomial(tuple(zi), tuple(zj), l): c}, mode)

    @classmethod
    def z(cls, sig: Signature, alpha: int, trunc: int, mode=CoefficientMode.EXACT) -> Series:
        return Series(sig, trunc, {Monomial(unit_index(sig.n, alpha), (0,) * sig.n, 0): 1}, mode)

    @classmethod
    def zbar(cls, sig: Signature, alpha: int, trunc: int, mode=CoefficientMode.EXACT) -> Series:
        return Series(sig, trunc, {Monomial((0,) * sig.n, unit_index(sig.n, alpha), 0): 1}, mode)

    @classmethod
    def u(cls, sig: Signature, trunc: int, mode=CoefficientMode.EXACT) -> DefiningSeries:
        zero = (0,) * sig.n
        return DefiningSeries(sig, trunc, {Monomial(zero, zero, 1): 1}, mode)

    @classmethod
    def hermitian(cls, sig: Signature, trunc: int, mode=CoefficientMode.EXACT) -> DefiningSeries:
        """⟨z,z⟩."""
        terms = {
            Monomial(unit_index(sig.n, alpha), unit_index(sig.n, alpha), 0): eps
            for alpha, eps in enumerate(sig.eps)
        }
        return DefiningSeries(sig, trunc, terms, mode)

    @classmethod
    def inner_z_a(cls, sig: Signature, a: Sequence, trunc: int, mode=CoefficientMode.EXACT) -> Series:
        """⟨z,a⟩ = Σ ε_α z^α ā^α."""
        zero = (0,) * sig.n
        terms = {}
        for alpha, eps in enumerate(sig.eps):
            terms[Monomial(unit_index(sig.n, alpha), zero, 0)] = to_scalar(a[alpha], mode).conjugate() * eps
        return Series(sig, trunc, terms, mode)

    @classmethod
    def inner_a_z(cls, sig: Signature, a: Sequence, trunc: int, mode=CoefficientMode.EXACT) -> Series:
        """⟨a,z⟩ = Σ ε_α a^α z̄^α."""
        zero = (0,) * sig.n
        terms = {}
        for alpha, eps in enumerate(sig.eps):
            terms[Monomial(zero, unit_index(sig.n, alpha), 0)] = to_scalar(a[alpha], mode) * eps
        return Series(sig, trunc, terms, mode)

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mon: Monomial):
        return self.terms.get(mon, to_scalar(0, self.mode))

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def weights(self) -> list[int]:
        return sorted({m.weight for m in self.terms})

    def max_abs(self) -> float:
        return max((abs(complex(c)) for c in self.terms.values()), default=0.0)

    def is_real(self, tol: float = 0.0) -> bool:
        return self.reality_defect() <= tol

    def reality_defect(self) -> float:
        worst = 0.0
        for mon, c in self.terms.items():
            mirror = self.terms.get(mon.mirror)
            if mirror is None:
                worst = max(worst, abs(complex(c)))
            elif self.mode == CoefficientMode.EXACT:
                if c != mirror.conjugate():
                    worst = max(worst, abs(complex(c - mirror.conjugate())))
            else:
                worst = max(worst, abs(c - mirror.conjugate()))
        return worst

    def is_holomorphic(self) -> bool:
        return all(not any(m.zj) for m in self.terms)

    def _grouped_by_weight(self) -> list[tuple[int, list]]:
        if self._grouped is None:
            groups: dict[int, list] = {}
            for mon, c in self.terms.items():
                groups.setdefault(mon.weight, []).append((mon, c))
            self._grouped = sorted(groups.items())
        return self._grouped

    def _check(self, other: Series) -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(self.sig, other.sig)
        if self.mode != other.mode:
            raise ModeMismatch(self.mode.value, other.mode.value)

    def _both_real(self, other: Series | None = None) -> bool:
        return isinstance(self, DefiningSeries) and (other is None or isinstance(other, DefiningSeries))

    # ring operations

    def __add__(self, other):
        if not isinstance(other, Series):
            if other == 0:
                return self
            return NotImplemented
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        terms = {m: c for m, c in self.terms.items() if m.weight <= trunc}
        _accumulate(terms, other.terms, trunc)
        return self._spawn(terms, trunc, real=self._both_real(other))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return self._spawn({m: -c for m, c in self.terms.items()}, real=self._both_real())

    def __sub__(self, other):
        if not isinstance(other, Series):
            if other == 0:
                return self
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        c = to_scalar(c, self.mode)
        return self.scale(1 / c)

    def __pow__(self, k: int) -> Series:
        result = self._spawn({Monomial.one(self.sig.n): to_scalar(1, self.mode)}, real=self._both_real())
        for _ in range(k):
            result = result.mul(self)
        return result

    def scale(self, c) -> Series:
        real = self._both_real() and _is_real_scalar(c)
        c = to_scalar(c, self.mode)
        if not c:
            return self._spawn({}, real=real)
        terms = {}
        for m, v in self.terms.items():
            p = v * c
            if p:
                terms[m] = p
        return self._spawn(terms, real=real)

    def mul(self, other: Series, trunc: int | None = None) -> Series:
        """Product truncated at the smaller trunc (or at `trunc` if smaller still)."""
        self._check(other)
        cap = min(self.trunc, other.trunc)
        if trunc is not None:
            cap = min(cap, trunc)
        groups = other._grouped_by_weight()
        out: dict = {}
        for m1, c1 in self.terms.items():
            budget = cap - m1.weight
            if budget < 0:
                continue
            for w2, group in groups:
                if w2 > budget:
                    break
                for m2, c2 in group:
                    key = m1.times(m2)
                    prev = out.get(key)
                    out[key] = c1 * c2 if prev is None else prev + c1 * c2
        out = {m: c for m, c in out.items() if c}
        return self._spawn(out, cap, real=self._both_real(other))

    # structure

    def conj(self) -> Series:
        return self._spawn(
            {m.mirror: c.conjugate() for m, c in self.terms.items()},
            real=self._both_real(),
        )

    def re(self) -> DefiningSeries:
        half = to_scalar(1, self.mode) / 2
        s = (self + self.conj()).scale(half)
        return self._spawn(s.terms, s.trunc, real=True)

    def im(self) -> DefiningSeries:
        factor = -imag_unit(self.mode) / 2
        s = (self - self.conj()).scale(factor)
        return self._spawn(s.terms, s.trunc, real=True)

    def filter(self, keep: Callable[[Monomial], bool], real: bool | None = None) -> Series:
        terms = {m: c for m, c in self.terms.items() if keep(m)}
        return self._spawn(terms, real=self._both_real() if real is None else real)

    def weight_part(self, k: int) -> Series:
        return self.filter(lambda m: m.weight == k)

    def up_to_weight(self, k: int) -> Series:
        return self.filter(lambda m: m.weight <= k)

    def type_part(self, s: int, t: int) -> Series:
        return self.filter(lambda m: m.type == (s, t), real=self._both_real() and s == t)

    def with_trunc(self, trunc: int) -> Series:
        """Same terms under another storage cap; terms above the cap are dropped."""
        terms = {m: c for m, c in self.terms.items() if m.weight <= trunc}
        return self._spawn(terms, trunc, real=self._both_real())

    def decompose(self, mode: DecomposeMode = DecomposeMode.BY_WEIGHT) -> dict:
        mode = DecomposeMode(mode)
        buckets: dict = {}
        for m, c in self.terms.items():
            key = m.weight if mode == DecomposeMode.BY_WEIGHT else m.type
            buckets.setdefault(key, {})[m] = c
        out = {}
        for key in sorted(buckets):
            real = self._both_real() and (mode == DecomposeMode.BY_WEIGHT or key[0] == key[1])
            out[key] = self._spawn(buckets[key], real=real)
        return out

    # calculus

    def d_z(self, alpha: int) -> Series:
        terms = {}
        for m, c in self.terms.items():
            k = m.zi[alpha]
            if k:
                zi = m.zi[:alpha] + (k - 1,) + m.zi[alpha + 1 :]
                terms[Monomial(zi, m.zj, m.l)] = c * k
        return self._spawn(terms)

    def d_zbar(self, alpha: int) -> Series:
        terms = {}
        for m, c in self.terms.items():
            k = m.zj[alpha]
            if k:
                zj = m.zj[:alpha] + (k - 1,) + m.zj[alpha + 1 :]
                terms[Monomial(m.zi, zj, m.l)] = c * k
        return self._spawn(terms)

    def d_u(self) -> Series:
        terms = {Monomial(m.zi, m.zj, m.l - 1): c * m.l for m, c in self.terms.items() if m.l}
        return self._spawn(terms, real=self._both_real())

    def laplacian(self, order: int = 1) -> Series:
        """Δ^order with Δ = Σ ε_α ∂²/∂z^α∂z̄^α."""
        current = self.terms
        eps = self.sig.eps
        for _ in range(order):
            nxt: dict = {}
            for m, c in current.items():
                for alpha, sign in enumerate(eps):
                    i, j = m.zi[alpha], m.zj[alpha]
                    if i and j:
                        key = Monomial(
                            m.zi[:alpha] + (i - 1,) + m.zi[alpha + 1 :],
                            m.zj[:alpha] + (j - 1,) + m.zj[alpha + 1 :],
                            m.l,
                        )
                        v = c * (sign * i * j)
                        prev = nxt.get(key)
                        nxt[key] = v if prev is None else prev + v
            current = {m: c for m, c in nxt.items() if c}
        return self._spawn(current, real=self._both_real())

    # substitution and evaluation

    def compose(
        self,
        zs: Sequence[Series],
        zbars: Sequence[Series] | None,
        u: Series | None,
        trunc: int | None = None,
    ) -> Series:
        """
        Substitute z^α → zs[α], z̄^α → zbars[α], u → u and truncate.

        Substituted series must have no constant term so that truncation by
        weight is exact. zbars and u may be None when the corresponding
        variables do not occur.
        """
        ref = next(s for s in (*zs, *(zbars or ()), u) if s is not None)
        cap = ref.trunc if trunc is None else trunc
        n = self.sig.n
        one = ref._spawn({Monomial.one(ref.sig.n): to_scalar(1, ref.mode)}, cap)

        def cached_product(cache: dict, index: tuple[int, ...], base: Sequence[Series]) -> Series:
            if index in cache:
                return cache[index]
            alpha = max(a for a in range(n) if index[a])
            lower = index[:alpha] + (index[alpha] - 1,) + index[alpha + 1 :]
            value = cached_product(cache, lower, base).mul(base[alpha], cap)
            cache[index] = value
            return value

        zero_index = (0,) * n
        zi_cache = {zero_index: one}
        zj_cache = {zero_index: one}
        u_powers = [one]

        by_zi: dict = {}
        for m, c in self.terms.items():
            by_zi.setdefault(m.zi, []).append((m.zj, m.l, c))

        mixed_cache: dict = {}
        out: dict = {}
        for zi, rest in by_zi.items():
            inner: dict = {}
            for zj, l, c in rest:
                key = (zj, l)
                if key not in mixed_cache:
                    while len(u_powers) <= l:
                        u_powers.append(u_powers[-1].mul(u, cap))
                    left = cached_product(zj_cache, zj, zbars) if any(zj) else one
                    mixed_cache[key] = left.mul(u_powers[l], cap) if l else left
                _accumulate(inner, mixed_cache[key].terms, cap, c)
            inner_series = ref._spawn({m: v for m, v in inner.items() if v}, cap)
            left = cached_product(zi_cache, zi, zs) if any(zi) else one
            _accumulate(out, left.mul(inner_series, cap).terms, cap)
        return ref._spawn({m: v for m, v in out.items() if v}, cap)

    def evaluate(self, z: Iterable[complex], u: complex, zbar: Iterable[complex] | None = None) -> complex:
        """Numeric value at (z, z̄, u); z̄ defaults to the conjugate of z."""
        z = [complex(x) for x in z]
        zb = [x.conjugate() for x in z] if zbar is None else [complex(x) for x in zbar]
        total = 0j
        for m, c in self.terms.items():
            term = complex(c)
            for alpha, k in enumerate(m.zi):
                if k:
                    term *= z[alpha] ** k
            for alpha, k in enumerate(m.zj):
                if k:
                    term *= zb[alpha] ** k
            if m.l:
                term *= u**m.l
            total += term
        return total

    def to_mode(self, mode: CoefficientMode) -> Series:
        mode = CoefficientMode(mode)
        if mode == self.mode:
            return self
        obj = type(self).__new__(type(self))
        obj.sig, obj.trunc, obj.mode, obj._grouped = self.sig, self.trunc, mode, None
        obj.terms = {m: to_scalar(c, mode) for m, c in self.terms.items()}
        return obj

    def chop(self, tol: float) -> Series:
        """Drop float coefficients below tol in modulus."""
        return self.filter(lambda m: abs(complex(self.terms[m])) > tol)

    def close_to(self, other: Series, tol: float) -> bool:
        return (self - other).max_abs() <= tol

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.sig == other.sig and self.mode == other.mode and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{m}" for m, c in self.sorted_terms()) or "0"
        return f"{type(self).__name__}[{self.sig}, N={self.trunc}, {self.mode.value}]({body})"


class DefiningSeries(Series):
    """
    Real series F(z, z̄, u): coeff(I, J, l) is the conjugate of coeff(J, I, l).

    Reality is validated when built from raw terms; results of operations
    that preserve reality are produced without re-checking.
    """

    __slots__ = ()

    def __init__(self, sig, trunc, terms=None, mode=CoefficientMode.EXACT, tol: float | None = None):
        super().__init__(sig, trunc, terms, mode)
        self.validate_reality(tol)

    def validate_reality(self, tol: float | None = None) -> None:
        if self.mode == CoefficientMode.EXACT:
            limit = 0.0
        else:
            limit = (settings.REALITY_TOL if tol is None else tol) * max(1.0, self.max_abs())
        for mon, c in self.terms.items():
            mirror = self.terms.get(mon.mirror, to_scalar(0, self.mode))
            defect = abs(complex(c - mirror.conjugate()))
            if defect > limit or (limit == 0.0 and c != mirror.conjugate()):
                raise RealityViolation(mon, defect)

    @classmethod
    def from_series(cls, series: Series, tol: float | None = None) -> DefiningSeries:
        return cls(series.sig, series.trunc, series.terms, series.mode, tol=tol)

    def value(self, z: Iterable[complex], u: float, tol: float | None = None) -> float:
        """Real value at (z, u); the imaginary residue is checked and discarded."""
        total = self.evaluate(z, u)
        tol = settings.REALITY_TOL if tol is None else tol
        if abs(total.imag) > tol * max(1.0, abs(total)):
            raise RealityViolation("evaluation", abs(total.imag))
        return total.real


def _accumulate(target: dict, source: dict, cap: int, factor=None) -> None:
    for m, c in source.items():
        if m.weight > cap:
            continue
        v = c if factor is None else c * factor
        prev = target.get(m)
        if prev is None:
            target[m] = v
        else:
            s = prev + v
            if s:
                target[m] = s
            else:
                del target[m]
