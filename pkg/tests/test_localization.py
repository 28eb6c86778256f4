from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautcurve.algebra import RationalFunction, TruncatedSeries
from tautcurve.errors import DegenerateFixture, UsageError
from tautcurve.localization import (CurveFixture, FixedPointChart, PsiPhi, TotalChernX,
                                    TotalSegreX, affine_line, chern_number,
                                    enumerate_fixed_points, equivariant_class_integral,
                                    equivariant_euler_characteristic, fixed_point_count,
                                    fixture_invariants, load_fixture, p1_bundle, p1_line,
                                    p1_mixed, p1_r_trivial, standard_fixtures, tangent_weights,
                                    taut_weights)
from tautcurve.tautseries import affine_chern_product, factorization_check

from oracles import brute_localization, brute_number, segre_line_p1

P1 = p1_line(0)


def test_fixed_point_enumeration():
    assert enumerate_fixed_points(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert enumerate_fixed_points(3, 1) == [(3,)]
    assert len(enumerate_fixed_points(5, 2)) == fixed_point_count(5, 2) == 6
    assert len(enumerate_fixed_points(4, 3)) == fixed_point_count(4, 3) == 15
    with pytest.raises(UsageError):
        enumerate_fixed_points(2, 0)


def test_tangent_weights():
    assert tangent_weights((3,), affine_line(0)) == (-3, -2, -1)
    assert tangent_weights((1, 1), P1) == (-1, 1)
    assert tangent_weights((2, 0), P1) == (1, 2)


def test_taut_weights():
    assert taut_weights((2,), affine_line(5)) == (5, 6)
    d, n = 2, 4
    assert taut_weights((0, n), p1_line(d)) == tuple(range(-d, -d + n))
    assert taut_weights((1, 1), p1_mixed(2)) == (0, 0, 0, 1)


def test_equivariant_class_integral_examples():
    seg = equivariant_class_integral(P1, 1, TotalSegreX())
    assert seg[1] == 0
    aff = equivariant_class_integral(affine_line(0), 1, TotalChernX())
    t = RationalFunction.gen("t")
    assert aff[0] == -1 / t
    seg2 = equivariant_class_integral(P1, 2, TotalSegreX(), order=6)
    # x^2 / (1 - x^2 t^2)
    assert [seg2[k] for k in range(7)] == [0, 0, 1, 0, t * t, 0, t ** 4]
    # sign -1 swaps Chern and Segre
    assert equivariant_class_integral(P1, 2, TotalChernX(), sign=-1, order=6) == seg2


@pytest.mark.parametrize("fixture,n,mode,value", [
    (p1_line(2), 2, "chern", 1),
    (p1_line(0), 2, "segre", 1),
    (p1_line(-1), 2, "segre", 3),
])
def test_chern_number_examples(fixture, n, mode, value):
    assert chern_number(fixture, n, mode) == value


def test_chern_number_rejects_noncompact():
    with pytest.raises(UsageError):
        chern_number(affine_line(0), 1)


compact_fixture = st.builds(
    lambda degs: p1_bundle(degs), st.lists(st.integers(-3, 3), min_size=1, max_size=3))


@settings(max_examples=25, deadline=None)
@given(compact_fixture, st.integers(0, 4), st.booleans())
def test_matches_brute_force_localization(fixture, n, segre):
    mode = "segre" if segre else "chern"
    assert chern_number(fixture, n, mode) == brute_number(fixture, n, segre)


@settings(max_examples=25, deadline=None)
@given(compact_fixture, st.integers(0, 4), st.booleans())
def test_t_independence(fixture, n, segre):
    """Below x^n the sum over fixed points cancels; at x^n it is constant."""
    spec = TotalSegreX() if segre else TotalChernX()
    series = equivariant_class_integral(fixture, n, spec, order=n)
    for k in range(n):
        assert series[k] == 0
    assert series[n].is_constant()


@pytest.mark.parametrize("d", range(-3, 4))
def test_segre_line_oracle(d):
    for n in range(7):
        assert chern_number(p1_line(d), n, "segre") == segre_line_p1(d, n)


formal_point = st.builds(lambda c, ws: FixedPointChart(c, tuple(ws)),
                         st.integers(-2, 2).filter(bool),
                         st.lists(st.integers(-2, 2), min_size=1, max_size=1))


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda l: st.lists(formal_point, min_size=l, max_size=l)))
def test_factorization_random_formal(points):
    rank = len(points[0].bundle_weights)
    points = [p for p in points if len(p.bundle_weights) == rank]
    fixture = CurveFixture("random", False, tuple(points))
    report = factorization_check(fixture, 6)
    assert report.passed, report.summary()


def test_factorization_brute_force():
    fixture = CurveFixture("formal", False, ((2, (1,)), (-1, (0,)), (1, (-2,))))
    prod = affine_chern_product((1,), 2, 3) * affine_chern_product((0,), -1, 3) * \
        affine_chern_product((-2,), 1, 3)
    for n in range(4):
        assert prod[n] == brute_localization(fixture, n, segre=False)


def test_psi_phi_counts_fixed_points():
    psi = TruncatedSeries([1], 0, "x")
    phi = TruncatedSeries([0, 1], 1, "x")
    for n in range(5):
        assert equivariant_class_integral(P1, n, PsiPhi(psi, phi)) == n + 1


def test_psi_needs_unit_constant():
    with pytest.raises(UsageError):
        PsiPhi(TruncatedSeries([2, 1], 1, "x"))


# K-theoretic side ----------------------------------------------------------

def test_lefschetz_affine_product_form():
    a = 2
    chi = equivariant_euler_characteristic(affine_line(a), 2)
    q = RationalFunction.gen("q")
    den = (1 - q) * (1 - q * q)
    assert chi[0] == 1 / den
    assert chi[1] == -(q ** a + q ** (a + 1)) / den
    assert chi[2] == q ** (2 * a + 1) / den


def test_lefschetz_p1_line():
    chi = equivariant_euler_characteristic(p1_line(1), 1)
    q = RationalFunction.gen("q")
    assert chi[0] == 1
    assert chi[1] == -(1 + 1 / q)


@pytest.mark.parametrize("d", range(-3, 4))
def test_lefschetz_at_q_equal_one(d):
    chi = equivariant_euler_characteristic(p1_line(d), 1)
    values = [c.to_laurent().evaluate(1) for c in chi.coeffs]
    assert values == [1, -(d + 1)]


# fixtures -------------------------------------------------------------------

def test_fixture_invariants():
    inv = fixture_invariants(p1_line(3))
    assert (inv.euler, inv.total_degree) == (2, 3)
    inv = fixture_invariants(p1_r_trivial(3))
    assert inv.euler == 2 and inv.degrees == (0, 0, 0)
    assert fixture_invariants(p1_mixed(2)).degrees == (0, -1)
    assert not inv.formal


def test_standard_fixtures():
    f = standard_fixtures("P1_line", -1)
    assert [p.bundle_weights for p in f.points] == [(0,), (1,)]
    aff = standard_fixtures("AffineLine", 0)
    assert aff.num_points == 1 and not aff.compact
    with pytest.raises(UsageError):
        standard_fixtures("K3", 1)


def _doc(points, compact=True, name="test"):
    return {"name": name, "compact": compact,
            "points": [{"cotangent_weight": c, "bundle_weights": w} for c, w in points]}


def test_load_fixture(tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps(_doc([(-1, [0]), (1, [1])], name="P1 L_-1")))
    f = load_fixture(path)
    assert f == CurveFixture("P1 L_-1", True, p1_line(-1).points)
    assert f.to_dict() == _doc([(-1, [0]), (1, [1])], name="P1 L_-1")
    assert CurveFixture.from_dict(f.to_dict()) == f


@pytest.mark.parametrize("doc,fragment", [
    (_doc([(0, [0]), (1, [1])]), "cotangent"),
    (_doc([(-1, [0, 0]), (1, [1])]), "bundle_weights"),
    (_doc([]), "point"),
    ({"name": "x", "points": []}, "compact"),
    (_doc([(-1, ["a"]), (1, [1])]), "points[0]"),
])
def test_fixture_rejections(tmp_path, doc, fragment):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(DegenerateFixture, match=fragment.replace("[", r"\[")):
        load_fixture(path)


def test_fixture_not_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(DegenerateFixture):
        load_fixture(path)


def test_zero_cotangent_rejected():
    with pytest.raises(DegenerateFixture):
        CurveFixture("bad", True, ((0, (1,)), (1, (0,))))


def test_formal_fixture_degree():
    f = CurveFixture("formal", True, ((2, (1,)), (-2, (0,))))
    assert fixture_invariants(f).degrees == (Fraction(-1, 2),)
    assert fixture_invariants(f).formal
