"""Torus fixed-point data on curves and localization on their Hilbert schemes.

Weight conventions
------------------
Each fixed point P_i of the curve carries a cotangent weight ``c_i`` (the
cotangent line at P_i is the character q^{c_i}) and, for every summand of the
bundle E, an integer weight ``a_{j,i}`` (E restricted to P_i has characters
q^{a_{j,i}}).  Fixed points of C^[n] are compositions (n_1, ..., n_l) of n.
At such a point, in units of the equivariant parameter t,

* the tangent space has weights  -s*c_i,          1 <= s <= n_i,
* the tautological bundle E^[n]  a_{j,i} + s*c_i,  0 <= s <= n_i - 1.

Integrals are sums over fixed points of the class restricted there divided by
the product of tangent weights.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from pathlib import Path
from typing import Sequence, Union

from .algebra import LaurentPolynomial, RationalFunction, TruncatedSeries
from .errors import DegenerateFixture, EquivarianceLeak, UsageError

HilbFixedPoint = tuple  # tuple[int, ...], a composition of n
WeightMultiset = tuple  # sorted tuple[int, ...], additive weights in units of t


@dataclass(frozen=True)
class FixedPointChart:
    cotangent_weight: int
    bundle_weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bundle_weights", tuple(int(a) for a in self.bundle_weights))
        if int(self.cotangent_weight) != self.cotangent_weight:
            raise DegenerateFixture("cotangent weights must be integers")
        object.__setattr__(self, "cotangent_weight", int(self.cotangent_weight))


@dataclass(frozen=True)
class CurveFixture:
    """A curve with torus action plus an equivariant bundle, as fixed-point data."""

    name: str
    compact: bool
    points: tuple[FixedPointChart, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, FixedPointChart) else FixedPointChart(*p)
                    for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise DegenerateFixture("a fixture needs at least one fixed point")
        for i, p in enumerate(pts):
            if p.cotangent_weight == 0:
                raise DegenerateFixture(f"point {i}: cotangent_weight must be nonzero")
        ranks = {len(p.bundle_weights) for p in pts}
        if len(ranks) != 1:
            raise DegenerateFixture(
                f"all points need the same number of bundle_weights, got {sorted(ranks)}")
        if not ranks.pop():
            raise DegenerateFixture("bundle rank must be at least 1")

    @property
    def rank(self) -> int:
        return len(self.points[0].bundle_weights)

    @property
    def num_points(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "compact": self.compact,
            "points": [{"cotangent_weight": p.cotangent_weight,
                        "bundle_weights": list(p.bundle_weights)} for p in self.points],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CurveFixture":
        if not isinstance(doc, dict):
            raise DegenerateFixture("fixture document must be a JSON object")
        for key, kind in (("name", str), ("compact", bool), ("points", list)):
            if key not in doc:
                raise DegenerateFixture(f"missing field {key!r}")
            if not isinstance(doc[key], kind):
                raise DegenerateFixture(f"field {key!r} must be {kind.__name__}")
        charts = []
        for i, p in enumerate(doc["points"]):
            if not isinstance(p, dict):
                raise DegenerateFixture(f"points[{i}] must be an object")
            c = p.get("cotangent_weight")
            ws = p.get("bundle_weights")
            if not isinstance(c, int) or isinstance(c, bool):
                raise DegenerateFixture(f"points[{i}].cotangent_weight must be an integer")
            if not isinstance(ws, list) or not all(
                    isinstance(a, int) and not isinstance(a, bool) for a in ws):
                raise DegenerateFixture(f"points[{i}].bundle_weights must be a list of integers")
            charts.append(FixedPointChart(c, tuple(ws)))
        return cls(doc["name"], doc["compact"], tuple(charts))


def load_fixture(path: Union[str, Path]) -> CurveFixture:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DegenerateFixture(f"{path}: not valid JSON ({exc})") from exc
    return CurveFixture.from_dict(doc)


@dataclass(frozen=True)
class KClassSpec:
    """A bundle on a fixture, taken with sign +1 (E) or -1 (the virtual -E)."""

    fixture: CurveFixture
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise UsageError("sign must be +1 or -1")

    @property
    def rank(self) -> int:
        return self.fixture.rank


# class specifications -------------------------------------------------------

@dataclass(frozen=True)
class TotalChernX:
    """Total Chern class graded by x: prod (1 + x w t)."""


@dataclass(frozen=True)
class TotalSegreX:
    """Total Segre class graded by x: prod 1/(1 + x w t)."""


@dataclass(frozen=True)
class PsiPhi:
    """Multiplicative class psi on the tautological roots, phi on tangent roots.

    Both are used as the polynomials given by their stored coefficients.
    """

    psi: TruncatedSeries
    phi: TruncatedSeries = field(default=None)

    def __post_init__(self):
        if self.psi.coeffs[0] != 1:
            raise UsageError("psi needs constant term 1")
        if self.phi is None:
            object.__setattr__(self, "phi", TruncatedSeries([1], 0, self.psi.var))


ClassSpec = Union[TotalChernX, TotalSegreX, PsiPhi]


# fixed points and weights ---------------------------------------------------

def enumerate_fixed_points(n: int, l: int) -> list[HilbFixedPoint]:
    """Compositions of n into l nonnegative parts, first part descending.

    >>> enumerate_fixed_points(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if l < 1:
        raise UsageError("need at least one fixed point on the curve")
    if n < 0:
        raise UsageError("n must be nonnegative")
    if l == 1:
        return [(n,)]
    return [(k,) + rest for k in range(n, -1, -1)
            for rest in enumerate_fixed_points(n - k, l - 1)]


def _check_compatible(fp: HilbFixedPoint, fixture: CurveFixture):
    if len(fp) != fixture.num_points:
        raise UsageError(f"fixed point {fp} has {len(fp)} parts, fixture has "
                         f"{fixture.num_points} points")


def tangent_weights(fp: HilbFixedPoint, fixture: CurveFixture) -> WeightMultiset:
    _check_compatible(fp, fixture)
    return tuple(sorted(-s * p.cotangent_weight
                        for p, ni in zip(fixture.points, fp) for s in range(1, ni + 1)))


def taut_weights(fp: HilbFixedPoint, fixture: CurveFixture) -> WeightMultiset:
    _check_compatible(fp, fixture)
    return tuple(sorted(a + s * p.cotangent_weight
                        for p, ni in zip(fixture.points, fp)
                        for a in p.bundle_weights for s in range(ni)))


# cohomological localization -------------------------------------------------

def _elementary(ws: Sequence[int], top: int) -> list[int]:
    """e_0..e_top of the weights (coefficients of prod (1 + w x))."""
    e = [1] + [0] * top
    for w in ws:
        for k in range(top, 0, -1):
            e[k] += w * e[k - 1]
    return e


def _complete_signed(ws: Sequence[int], top: int) -> list[int]:
    """Coefficients of prod 1/(1 + w x) up to x^top, i.e. (-1)^k h_k."""
    h = [1] + [0] * top
    for w in ws:
        for k in range(1, top + 1):
            h[k] -= w * h[k - 1]
    return h


def _x_graded_scalars(fixture: CurveFixture, n: int, segre: bool,
                      top: int) -> list[Fraction]:
    """sum over fixed points of [x^k] class / prod(tangent), with t stripped.

    Every factor (1 + x w t)^{+-1} is homogeneous in x*t, so the x^k part of a
    fixed-point term is a scalar times t^(k-n).
    """
    acc = [Fraction(0)] * (top + 1)
    for fp in enumerate_fixed_points(n, fixture.num_points):
        tw = tangent_weights(fp, fixture)
        if any(w == 0 for w in tw):
            raise DegenerateFixture(f"zero tangent weight at fixed point {fp}")
        euler = prod(tw)
        ws = taut_weights(fp, fixture)
        coeffs = _complete_signed(ws, top) if segre else _elementary(ws, top)
        for k, c in enumerate(coeffs):
            if c:
                acc[k] += Fraction(c, euler)
    return acc


def _psi_phi_laurent(fixture: CurveFixture, n: int, spec: PsiPhi) -> LaurentPolynomial:
    psi, phi = spec.psi.coeffs, spec.phi.coeffs
    total = LaurentPolynomial({}, "t")
    for fp in enumerate_fixed_points(n, fixture.num_points):
        tw = tangent_weights(fp, fixture)
        if any(w == 0 for w in tw):
            raise DegenerateFixture(f"zero tangent weight at fixed point {fp}")
        term = LaurentPolynomial({-len(tw): Fraction(1, prod(tw))}, "t")
        for w in tw:
            term = term * LaurentPolynomial({k: c * w ** k for k, c in enumerate(phi)}, "t")
        for w in taut_weights(fp, fixture):
            term = term * LaurentPolynomial({k: c * w ** k for k, c in enumerate(psi)}, "t")
        total = total + term
    return total


def _swap(spec: ClassSpec, sign: int) -> ClassSpec:
    if sign == 1:
        return spec
    if isinstance(spec, TotalChernX):
        return TotalSegreX()
    if isinstance(spec, TotalSegreX):
        return TotalChernX()
    raise UsageError("sign -1 is only defined for the x-graded Chern/Segre classes")


def equivariant_class_integral(fixture: CurveFixture, n: int, spec: ClassSpec,
                               sign: int = 1, order: int | None = None):
    """Equivariant integral over C^[n] of a tautological class, by localization.

    For TotalChernX/TotalSegreX returns a series in x (default order n) over
    Q(t); for PsiPhi returns a single element of Q(t).  ``sign=-1`` applies
    the class to -E instead of E, which swaps Chern and Segre.
    """
    if sign not in (1, -1):
        raise UsageError("sign must be +1 or -1")
    spec = _swap(spec, sign)
    if isinstance(spec, PsiPhi):
        return RationalFunction.from_laurent(_psi_phi_laurent(fixture, n, spec))
    top = n if order is None else order
    scalars = _x_graded_scalars(fixture, n, isinstance(spec, TotalSegreX), top)
    return TruncatedSeries([RationalFunction.monomial(c, k - n, "t") for k, c in
                            enumerate(scalars)], top, "x")


def chern_number(fixture: CurveFixture, n: int, mode: str = "chern") -> Fraction:
    """Nonequivariant integral over C^[n] of c(E^[n]) (mode 'chern') or s(E^[n])."""
    if mode not in ("chern", "segre"):
        raise UsageError("mode must be 'chern' or 'segre'")
    if not fixture.compact:
        raise UsageError(f"fixture {fixture.name!r} is not compact")
    return _chern_number_cached(fixture, n, mode)


@lru_cache(maxsize=None)
def _chern_number_cached(fixture: CurveFixture, n: int, mode: str) -> Fraction:
    spec = TotalChernX() if mode == "chern" else TotalSegreX()
    top = equivariant_class_integral(fixture, n, spec).coefficient(n).to_laurent()
    if not top.is_constant():
        raise EquivarianceLeak(f"x^{n} coefficient {top} depends on t")
    return top.constant_term()


# K-theoretic localization ---------------------------------------------------

def equivariant_euler_characteristic(fixture: CurveFixture, n: int,
                                     y_degree: int | None = None) -> TruncatedSeries:
    """chi(C^[n], Lambda_{-y} E^[n]) by the holomorphic Lefschetz formula.

    Returned as a series in y (default order rank*n, which is exact) whose
    coefficients lie in Q(q).
    """
    top = fixture.rank * n if y_degree is None else y_degree
    total = [RationalFunction((), (1,), "q") for _ in range(top + 1)]
    for fp in enumerate_fixed_points(n, fixture.num_points):
        # prod over tautological characters of (1 - y q^w)
        num = [LaurentPolynomial({0: 1}, "q")] + [LaurentPolynomial({}, "q")] * top
        for w in taut_weights(fp, fixture):
            mono = LaurentPolynomial({w: -1}, "q")
            for k in range(top, 0, -1):
                num[k] = num[k] + mono * num[k - 1]
        den = RationalFunction.constant(1, "q")
        for p, ni in zip(fixture.points, fp):
            for s in range(1, ni + 1):
                den = den * (1 - RationalFunction.monomial(1, s * p.cotangent_weight, "q"))
        inv = den.inverse()
        for k in range(top + 1):
            if num[k]:
                total[k] = total[k] + RationalFunction.from_laurent(num[k]) * inv
    return TruncatedSeries(total, top, "y")


# fixtures -------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureInvariants:
    euler: int
    degrees: tuple[Fraction, ...]
    formal: bool  # True when some degree is not an integer

    @property
    def total_degree(self) -> Fraction:
        return sum(self.degrees, Fraction(0))


def fixture_invariants(fixture: CurveFixture) -> FixtureInvariants:
    """Euler number and summand degrees, both computed by localization on C."""
    if not fixture.compact:
        raise UsageError(f"fixture {fixture.name!r} is not compact")
    # integrand / (tangent weight) with tangent weight -c_i at P_i
    euler = sum(Fraction(-p.cotangent_weight, -p.cotangent_weight) for p in fixture.points)
    degrees = tuple(
        sum((Fraction(p.bundle_weights[j], -p.cotangent_weight) for p in fixture.points),
            Fraction(0))
        for j in range(fixture.rank))
    formal = any(d.denominator != 1 for d in degrees) or euler.denominator != 1
    return FixtureInvariants(int(euler), degrees, formal)


def p1_bundle(degrees: Sequence[int], name: str | None = None) -> CurveFixture:
    """O(d_1) + ... + O(d_r) on P^1, with O(d) lifted to weights (0, -d)."""
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise UsageError("need at least one summand")
    name = name or "P1:" + ",".join(map(str, degrees))
    return CurveFixture(name, True, (
        FixedPointChart(-1, tuple(0 for _ in degrees)),
        FixedPointChart(1, tuple(-d for d in degrees)),
    ))


def p1_line(d: int) -> CurveFixture:
    return p1_bundle([d], f"P1_line({d})")


def p1_r_trivial(r: int) -> CurveFixture:
    return p1_bundle([0] * r, f"P1_r_trivial({r})")


def p1_mixed(r: int) -> CurveFixture:
    """(r-1) O + O(-1) on P^1."""
    return p1_bundle([0] * (r - 1) + [-1], f"P1_mixed({r})")


def affine_line(*weights: int) -> CurveFixture:
    """The affine line with its single fixed point (cotangent weight 1)."""
    weights = weights or (0,)
    return CurveFixture(f"AffineLine({','.join(map(str, weights))})", False,
                        (FixedPointChart(1, tuple(weights)),))


def standard_fixtures(kind: str, arg: int) -> CurveFixture:
    makers = {"P1_line": p1_line, "P1_r_trivial": p1_r_trivial,
              "P1_mixed": p1_mixed, "AffineLine": affine_line}
    if kind not in makers:
        raise UsageError(f"unknown fixture kind {kind!r}; choose from {sorted(makers)}")
    return makers[kind](arg)


def fixed_point_count(n: int, l: int) -> int:
    return comb(n + l - 1, l - 1)
