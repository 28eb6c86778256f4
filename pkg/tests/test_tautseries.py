from __future__ import annotations

from fractions import Fraction

import pytest

from tautcurve.algebra import Polynomial, RationalFunction, TruncatedSeries
from tautcurve.errors import UsageError
from tautcurve.localization import p1_bundle, p1_line, p1_mixed, p1_r_trivial
from tautcurve.tautseries import (B2_candidates, B3_candidates, chern_generating_series,
                                  conjectured_A, extract_universal_coeffs, printed_C,
                                  psi_phi_generating_series, swap_identity_check,
                                  universal_series, universal_series_for, verify_B_formulas,
                                  verify_conjecture12, verify_thm13)

from oracles import FROZEN, binom, chern_line_p1


def test_chern_generating_series_examples():
    assert chern_generating_series(p1_line(1), 1, 4).coeffs == (1, 1, 0, 0, 0)
    assert chern_generating_series(p1_line(0), -1, 4).coeffs == tuple(FROZEN["segre_P1_O"][:5])
    assert chern_generating_series(p1_r_trivial(2), 1, 3)[1] == 0


@pytest.mark.parametrize("d", range(-3, 4))
def test_rank_one_chern_is_binomial(d):
    assert list(chern_generating_series(p1_line(d), 1, 7)) == [chern_line_p1(d, n)
                                                               for n in range(8)]


def test_extract_examples():
    c = extract_universal_coeffs(1, 1, 6)
    assert c.first == (1, -1, 1, -1, 1, -1) and c.second == (0,) * 6
    c = extract_universal_coeffs(1, -1, 4)
    assert list(c.first) == FROZEN["C_rank1"] and list(c.second) == FROZEN["D_rank1"]
    assert extract_universal_coeffs(2, 1, 3).first == (1, -3, 10)
    c = extract_universal_coeffs(2, -1, 5)
    assert list(c.first) == FROZEN["C_rank2"] and list(c.second) == FROZEN["D_rank2"]
    assert c.names == ("C", "D")
    with pytest.raises(UsageError):
        extract_universal_coeffs(1, 0, 3)


def test_universal_series_symbolic():
    d, e = Polynomial.gens("d", "e")
    s = universal_series(extract_universal_coeffs(1, -1, 3), d, e)
    assert s[2] == (d * d - d * 3 + e) * Fraction(1, 2)
    plus = universal_series(extract_universal_coeffs(1, 1, 5), d, e)
    for n in range(6):
        # (1+z)^d: falling factorial / n!
        expected = Polynomial.constant(1, ("d", "e"))
        for i in range(n):
            expected = expected * (d - i) * Fraction(1, i + 1)
        assert plus[n] == expected


@pytest.mark.parametrize("fixture", [p1_line(0), p1_line(3), p1_mixed(3),
                                     p1_bundle([2, -1]), p1_bundle([1, 1, -2])])
@pytest.mark.parametrize("sign", [1, -1])
def test_universal_series_reproduces_localization(fixture, sign):
    assert universal_series_for(fixture, sign, 6) == chern_generating_series(fixture, sign, 6)


def test_candidate_formulas():
    assert conjectured_A(2, 3) == 10
    assert printed_C(2, 2) == -5
    assert B2_candidates(1) == {"(-1)^n (4^n - binom(2n-1,n-1))": -3,
                                "(-1)^n (4^(n-1) - binom(2n-1,n-1))": 0}
    for n in range(1, 6):
        assert set(B3_candidates(n)) == {"binom(3n-1,n-1) outside the i-sum",
                                         "binom(3n-1,n-1) inside the i-sum"}


def test_b2_oracle():
    second = extract_universal_coeffs(2, 1, 8).second
    assert list(second) == [(-1) ** n * (4 ** (n - 1) - binom(2 * n - 1, n - 1))
                            for n in range(1, 9)]


def test_universal_coefficient_relations():
    report = verify_conjecture12(5, 9)
    assert report.passed, report.summary()
    assert report.resolution["C^r_n = s(n) A^(r+1)_n"] == "(-1)^(n-1)"
    assert report.resolution["D^r_n = s(n) B^(r+1)_n"] == "(-1)^n"
    assert "off by an overall sign" in report.notes


def test_b_formula_adjudication():
    report = verify_B_formulas(10)
    assert report.passed, report.summary()
    assert report.resolution["B^2"].startswith("(-1)^n (4^(n-1)")
    assert report.resolution["B^3"] == "binom(3n-1,n-1) outside the i-sum"
    with pytest.raises(UsageError):
        verify_B_formulas(13)


@pytest.mark.parametrize("r,N", [(1, 8), (2, 6), (3, 5)])
def test_swap_identity(r, N):
    assert swap_identity_check(r, N).passed


def test_rank_one_chern_series():
    assert verify_thm13(10).passed


def test_psi_phi_reduces_to_chern():
    psi = TruncatedSeries([1, 1], 1, "x")
    phi = TruncatedSeries([1], 0, "x")
    s = psi_phi_generating_series(p1_line(2), psi, phi, 4)
    assert [c.constant_value() if c.is_constant() else c for c in s] == [1, 2, 1, 0, 0]


def test_psi_phi_fixed_point_count():
    psi = TruncatedSeries([1], 0, "x")
    phi = TruncatedSeries([0, 1], 1, "x")
    s = psi_phi_generating_series(p1_line(0), psi, phi, 5)
    assert list(s) == [RationalFunction.constant(n + 1) for n in range(6)]
