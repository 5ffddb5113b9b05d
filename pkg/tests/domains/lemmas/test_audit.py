"""Tests for the spectrum of A_m, the η table and the per-m nonsingularity audit."""

import math
from fractions import Fraction

import numpy as np
import pytest

from src.domains.lemmas.audit import audit_m, b3_excluded_value, nonsingularity_audit
from src.domains.lemmas.determinants import det_C
from src.domains.lemmas.errors import InvalidRange
from src.domains.lemmas.spectra import c_eigenvalue_product, eigenvalue_formula, eigenvalue_gap, eigs_A
from src.domains.lemmas.tables import PRINTED_ETA, eta_table, format_table, table_row


def test_eigs_of_a1():
    low, high = eigs_A(1)
    assert low == pytest.approx(1.5 - math.sqrt(17) / 2)
    assert high == pytest.approx(1.5 + math.sqrt(17) / 2)
    assert low + high == pytest.approx(3)
    assert low * high == pytest.approx(-2)


def test_eigs_of_a2():
    root = math.sqrt(17)
    assert np.allclose(eigs_A(2), [3 - root, 3, 3 + root])


@pytest.mark.parametrize("m", [1, 5, 20, 60, 150])
def test_eigenvalues_follow_formula(m):
    assert eigenvalue_gap(m) <= 1e-8
    assert len(eigenvalue_formula(m)) == m + 1


@pytest.mark.parametrize("m", range(1, 31))
def test_eigenvalue_product_is_det_c(m):
    det = float(det_C(m))
    assert c_eigenvalue_product(m) == pytest.approx(det, rel=1e-6)


def test_eigs_size_limit():
    with pytest.raises(InvalidRange):
        eigs_A(201)


def test_table_rows_within_printed_precision():
    rows = eta_table()
    assert [r.m for r in rows] == list(range(1, 31))
    assert all(r.passed for r in rows), [r.m for r in rows if not r.passed]


def test_table_keeps_both_readings_at_one():
    row = table_row(1)
    assert row.exact == Fraction(8, 3)
    assert row.alternate == 6


def test_table_eta_five_is_exact_quotient():
    row = table_row(5)
    assert row.exact == Fraction(-21, 4)
    assert row.printed == "-5.24"
    assert not table_row(5, tol=1e-3).passed


def test_table_layout():
    text = format_table(eta_table())
    lines = text.splitlines()
    assert len(lines) == 10
    assert lines[0].startswith("eta( 1)")
    assert "eta(11)" in lines[0] and "eta(21)" in lines[0]


def test_b3_excluded_value():
    assert b3_excluded_value(3) == 0
    assert b3_excluded_value(6) == -4


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 17])
def test_single_record(m):
    record = audit_m(m)
    assert record.passed, record.flags
    assert record.dense
    assert record.det_B == Fraction(record.det_C, 4)


def test_record_at_four_has_no_delta():
    record = audit_m(4)
    assert record.delta_m is None
    assert record.to_dict()["delta_m"] is None


def test_record_beyond_dense_limit():
    record = audit_m(40, dense_limit=10)
    assert not record.dense
    assert "det_C_matches_recurrence" not in record.flags
    assert record.flags["delta_bound"]
    assert record.passed


def test_audit_to_thirty():
    report = nonsingularity_audit(30)
    assert report.passed
    assert len(report.records) == 30
    assert report.summary()["failed_by_flag"]["det_B_is_quarter_det_C"] == 0


def test_audit_range_rejected():
    with pytest.raises(InvalidRange):
        nonsingularity_audit(0)
    with pytest.raises(InvalidRange):
        audit_m(0)


@pytest.mark.slow
def test_full_printed_table():
    rows = {r.m: r for r in eta_table()}
    assert sorted(rows) == sorted(PRINTED_ETA)
    for m, row in rows.items():
        assert row.printed == PRINTED_ETA[m]
        assert row.passed, (m, float(row.exact), row.printed)
    # printed 2.66 is 8/3; the recurrence reading gives 6
    assert rows[1].exact == Fraction(8, 3)
    assert rows[1].alternate == 6
    # printed -5.24 against the exact -21/4
    assert rows[5].exact == Fraction(-21, 4)
    assert rows[5].gap == pytest.approx(0.01)


@pytest.mark.slow
def test_audit_full_range():
    report = nonsingularity_audit(800, dense_limit=60)
    assert report.passed, report.failures()[:5]
    assert len(report.records) == 800
    dense = [r for r in report.records if r.dense]
    assert [r.m for r in dense] == list(range(1, 61))
    assert all(r.flags["delta_bound"] for r in report.records if r.m >= 30)
