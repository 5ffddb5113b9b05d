"""Tests for truncated series in (z, z̄, u): grading, calculus, reality and file schemas."""

from fractions import Fraction

import pytest

from src.domains.scalars.gaussian import CoefficientMode, GaussianRational
from src.domains.series.errors import InvalidSignature, InvalidTrace, RealityViolation, SignatureMismatch
from src.domains.series.models import DecomposeMode, Monomial, Signature
from src.domains.series.operators import decompose, eval_series, laplacian, min_type_at_least, ring_ops, trace_op
from src.domains.series.schemas import SeriesFile, schema_to_defining, series_to_schema
from src.domains.series.series import DefiningSeries, Series


def test_signature_bounds():
    with pytest.raises(InvalidSignature):
        Signature(2, 3)
    with pytest.raises(InvalidSignature):
        Signature(0, 0)
    assert Signature(2, 1).eps == (1, -1)
    assert Signature(2, 1).admits_flip
    assert not Signature(3, 1).admits_flip


def test_monomial_weight_and_type():
    m = Monomial((2, 0), (0, 1), 3)
    assert m.weight == 9
    assert m.type == (2, 1)
    assert m.mirror == Monomial((0, 1), (2, 0), 3)


def test_laplacian_of_hermitian_form(sig):
    Q = Series.hermitian(sig, 6)
    assert laplacian(Q) == Series.constant(sig, 6, sig.n)


def test_laplacian_of_square(sig):
    """Δ⟨z,z⟩² = 2(n+1)⟨z,z⟩ for every signature."""
    Q = Series.hermitian(sig, 6)
    assert laplacian(Q.mul(Q)) == Q.scale(2 * (sig.n + 1))


def test_trace_of_square(sig):
    Q = Series.hermitian(sig, 6)
    assert trace_op(Q.mul(Q), 2, 2) == Q.scale(Fraction(sig.n + 1, 2))


def test_trace_rejects_mixed_type():
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 6)
    with pytest.raises(InvalidTrace):
        trace_op(Q + Q.mul(Q), 2, 2)
    with pytest.raises(InvalidTrace):
        trace_op(Q, 0, 1)


def test_product_respects_truncation():
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 3)
    assert Q.mul(Q).is_zero
    assert ring_ops(Q, Q, "×").is_zero
    with pytest.raises(ValueError):
        ring_ops(Q, Q, "÷")


def test_ring_ops_require_same_signature():
    with pytest.raises(SignatureMismatch):
        Series.hermitian(Signature(1, 1), 4) + Series.hermitian(Signature(1, 0), 4)


def test_decompose_by_type():
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 8)
    F = Q + Q.mul(Q) + Series.u(sig, 8).mul(Q)
    parts = decompose(F, DecomposeMode.BY_TYPE)
    assert set(parts) == {(1, 1), (2, 2)}
    by_weight = decompose(F)
    assert sorted(by_weight) == [2, 4]
    assert by_weight[4] == Q.mul(Q) + Series.u(sig, 8).mul(Q)


def test_min_type_filter():
    sig = Signature(1, 1)
    F = Series.hermitian(sig, 8).mul(Series.hermitian(sig, 8)) + Series.u(sig, 8)
    assert min_type_at_least(F, 2) == Series.hermitian(sig, 8).mul(Series.hermitian(sig, 8))


def test_real_series_evaluates_to_real():
    sig = Signature(2, 1)
    Q = Series.hermitian(sig, 6)
    assert eval_series(Q, [1 + 1j, 0.5], 0.3) == pytest.approx(2 - 0.25)


def test_non_real_terms_rejected():
    sig = Signature(1, 1)
    with pytest.raises(RealityViolation):
        DefiningSeries(sig, 4, {Monomial((1,), (0,), 0): 1})
    with pytest.raises(RealityViolation):
        DefiningSeries(sig, 4, {Monomial((1,), (1,), 0): GaussianRational(0, 1)})


def test_composition_rescales():
    """Substituting z → 2z multiplies ⟨z,z⟩ by 4."""
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 6)
    two_z = Series.z(sig, 0, 6).scale(2)
    two_zbar = Series.zbar(sig, 0, 6).scale(2)
    assert Q.compose([two_z], [two_zbar], None) == Q.scale(4)


def test_float_mode_conversion():
    sig = Signature(1, 1)
    Q = Series.hermitian(sig, 6).mul(Series.hermitian(sig, 6)).scale(Fraction(1, 3))
    F = Q.to_mode(CoefficientMode.FLOAT)
    assert F.mode == CoefficientMode.FLOAT
    assert F.max_abs() == pytest.approx(1 / 3)


def test_schema_writes_rational_strings():
    sig = Signature(1, 1)
    F = Series.hermitian(sig, 6) + Series.hermitian(sig, 6).mul(Series.u(sig, 6)).scale(Fraction(1, 2))
    data = series_to_schema(F)
    assert data.trunc_weight == 6
    assert {(t.re, t.im) for t in data.terms} == {("1/1", "0/1"), ("1/2", "0/1")}
    assert schema_to_defining(SeriesFile.model_validate_json(data.model_dump_json())) == F


def test_schema_rejects_non_real_file():
    data = SeriesFile(n=1, e=1, trunc_weight=4, terms=[{"zi": [1], "zj": [0], "re": "1"}])
    with pytest.raises(RealityViolation):
        schema_to_defining(data)


def test_schema_rejects_wrong_exponent_length():
    data = SeriesFile(n=2, e=2, trunc_weight=4, terms=[{"zi": [1], "zj": [1], "re": "1"}])
    with pytest.raises(ValueError):
        schema_to_defining(data)
