from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautcurve.algebra import Polynomial, TruncatedSeries
from tautcurve.closedforms import (INDISTINGUISHABLE, beta_limit_check, chu_vandermonde_check,
                                   closed_form_series, invert_z_k, lambda_y_identity_check,
                                   lehn_closed_form, lehn_surface_inverse,
                                   lemma_Nnd_rational_identity, marian_oprea_series,
                                   ogf_A001791_check, prop33_lhs,
                                   prop33_probe, secant_node_check, secant_table,
                                   segre_closed_form_series, segre_exponential_form,
                                   verify_lehn_inverse, verify_lemma_nnd, verify_prop33,
                                   verify_thm14)
from tautcurve.errors import NegativeWeightUnsupported, UsageError
from tautcurve.localization import chern_number, p1_line

from oracles import FROZEN, binom, lagrange_k, segre_line_p1


def test_invert_examples():
    assert invert_z_k(0, 5) == TruncatedSeries.gen(5)
    assert invert_z_k(1, 4).coeffs == (0, 1, 1, 2, 5)
    assert invert_z_k(2, 3).coeffs == (0, 1, 2, 7)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 5))
def test_invert_matches_lagrange(r):
    assert list(invert_z_k(r, 7)) == [lagrange_k(r, n) for n in range(8)]


def test_segre_closed_form_values():
    assert list(segre_closed_form_series(0, 2, 5)) == FROZEN["segre_P1_O"]
    assert list(segre_closed_form_series(-1, 2, 4)) == FROZEN["segre_P1_O(-1)"]
    d, e = Polynomial.gens("d", "e")
    s = segre_closed_form_series(d, e, 3)
    assert s[2] == (d * d - d * 3 + e) * Fraction(1, 2)
    assert s == segre_exponential_form(d, e, 3)


@pytest.mark.parametrize("d", range(-3, 4))
def test_closed_form_against_binomials(d):
    assert list(closed_form_series(1, d, 2, 6)) == [segre_line_p1(d, n) for n in range(7)]


def test_segre_exponential_and_closed_forms_agree():
    report = verify_thm14(8)
    assert report.passed, report.summary()
    assert "symbolic" in report.notes


@pytest.mark.parametrize("r", range(1, 5))
def test_reversion_built_c_and_d(r):
    report = marian_oprea_series(r, 6)
    assert report.passed, report.summary()
    assert report.resolution[f"C argument (r={r})"] == "-t(1+t)^r"
    assert report.resolution[f"D argument (r={r})"] == "-t(1+t)^r"


def test_surface_functional_equation():
    assert list(lehn_surface_inverse(4)) == FROZEN["lehn_k"]
    a, b, c = Polynomial.gens("a", "b", "c")
    f = lehn_closed_form(a, b, c, 3)
    assert f[0] == 1
    assert f[1] == -a - b * 2 + c * 6
    assert verify_lehn_inverse(6).passed
    with pytest.raises(UsageError):
        lehn_surface_inverse(2)


def test_a001791():
    assert ogf_A001791_check(12).passed
    assert ogf_A001791_check(10).passed
    assert binom(6, 4) == 15
    with pytest.raises(UsageError):
        ogf_A001791_check(3)


def test_segre_rational_identity_single():
    report = lemma_Nnd_rational_identity(2, 0)
    assert report.passed
    assert chern_number(p1_line(0), 2, "segre") == binom(2, 2)


def test_segre_rational_identity_resolution():
    report = verify_lemma_nnd(5, range(-3, 4))
    assert report.passed, report.summary()
    assert report.resolution["denominator"] == "(1-(d-i)xt)"


def test_segre_rational_identity_nondiscriminating():
    # N_n^d = 0 here, so both denominator readings agree
    report = lemma_Nnd_rational_identity(3, 3)
    assert report.passed
    assert report.resolution["denominator"] == INDISTINGUISHABLE


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("d", range(-3, 4))
def test_chu_vandermonde(n, d):
    assert chu_vandermonde_check(n, d).passed


@pytest.mark.parametrize("Nz,Nq,a", [(5, 8, 0), (5, 10, 2), (4, 12, 1)])
def test_lambda_y(Nz, Nq, a):
    assert lambda_y_identity_check(Nz, Nq, a).passed


def test_lambda_y_rejects_negative_weight():
    with pytest.raises(NegativeWeightUnsupported):
        lambda_y_identity_check(3, 6, -1)


@pytest.mark.parametrize("a", [0, 1, 2, -1])
def test_beta_limit(a):
    assert beta_limit_check(8, a).passed


def test_lefschetz_series_reading():
    report = verify_prop33(5)
    assert report.passed, report.summary()
    assert report.resolution["right side"] == "exponential"
    assert prop33_probe(-1, 4).resolution["right side"] == INDISTINGUISHABLE
    y = Polynomial.gen("y")
    lhs = prop33_lhs(2, 1)
    assert lhs[1] == 1 - y * 3


def test_secant():
    assert [v for _, v in secant_table(3, 0, 4)] == FROZEN["secant_d3_g0"]
    assert dict(secant_table(1, 0, 2))[2] == 0
    for d in range(-2, 6):
        for g in range(3):
            assert dict(secant_table(d, g, 2))[2] == Fraction(d * d - 3 * d + 2 - 2 * g, 2)
    assert secant_node_check().passed
    with pytest.raises(UsageError):
        secant_table(3, -1, 2)
