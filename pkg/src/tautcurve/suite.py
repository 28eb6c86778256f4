"""Named verification checks, as run by ``tautcurve verify``.

Check names are stable; CI jobs may select them individually.
"""
from __future__ import annotations

from typing import Callable

from . import closedforms as cf
from . import tautseries as ts
from .localization import CurveFixture, affine_line, p1_bundle, p1_line, p1_mixed, p1_r_trivial
from .report import VerificationReport, merge

# a formal three-point fixture: not a real curve, but the localization algebra
# (and hence the factorization identity) does not care
# adjudicating checks need order >= 2: competing readings agree through z^1
MIN_ADJUDICATION_ORDER = 2

FORMAL_FIXTURE = CurveFixture("formal(l=3)", False,
                              ((2, (1, -2)), (-1, (0, 2)), (-3, (1, 1))))


def _conjecture12(order: int) -> VerificationReport:
    return ts.verify_conjecture12(5, max(order, MIN_ADJUDICATION_ORDER))


def _b_formulas(order: int) -> VerificationReport:
    return ts.verify_B_formulas(max(order, MIN_ADJUDICATION_ORDER))


def _swap(order: int) -> VerificationReport:
    return merge("swap", [ts.swap_identity_check(r, order) for r in (1, 2, 3)], order)


def _thm13(order: int) -> VerificationReport:
    return ts.verify_thm13(order, range(-2, 3))


def _thm14(order: int) -> VerificationReport:
    return cf.verify_thm14(order, range(-3, 4))


def _marian_oprea(order: int) -> VerificationReport:
    # D(z) starts at z^2, so the argument sign only shows from z^3 on
    order = max(order, 3)
    return merge("marian_oprea", [cf.marian_oprea_series(r, order) for r in range(1, 5)], order)


def _lehn_inverse(order: int) -> VerificationReport:
    return cf.verify_lehn_inverse(order)


def _a001791(order: int) -> VerificationReport:
    return cf.ogf_A001791_check(max(order, 4))


def _lemma_nnd(order: int) -> VerificationReport:
    return cf.verify_lemma_nnd(min(order, 8), range(-3, 4))


def _chu_vandermonde(order: int) -> VerificationReport:
    n_max = min(order, 8)
    return merge("chu_vandermonde", [cf.chu_vandermonde_check(n, d)
                                     for n in range(n_max + 1) for d in range(-3, 4)], n_max)


def _lambda_y(order: int) -> VerificationReport:
    nz = min(order, 5)
    return merge("lambda_y", [cf.lambda_y_identity_check(nz, 12, a) for a in (0, 1, 2)], nz)


def _prop33(order: int) -> VerificationReport:
    return cf.verify_prop33(max(min(order, 6), MIN_ADJUDICATION_ORDER), range(-2, 3))


def _factorization(order: int) -> VerificationReport:
    n = min(order, 6)
    fixtures = [p1_line(d) for d in range(-2, 3)] + [
        p1_r_trivial(2), p1_mixed(2), p1_bundle([1, -2, 0]), affine_line(1), affine_line(0, 2),
        FORMAL_FIXTURE]
    return merge("factorization", [ts.factorization_check(f, n) for f in fixtures], n)


def _secant_nodes(order: int) -> VerificationReport:
    return cf.secant_node_check()


CHECKS: dict[str, Callable[[int], VerificationReport]] = {
    "a001791": _a001791,
    "b_formulas": _b_formulas,
    "chu_vandermonde": _chu_vandermonde,
    "conjecture12": _conjecture12,
    "factorization": _factorization,
    "lambda_y": _lambda_y,
    "lehn_inverse": _lehn_inverse,
    "lemma_nnd": _lemma_nnd,
    "marian_oprea": _marian_oprea,
    "prop33": _prop33,
    "secant_nodes": _secant_nodes,
    "swap": _swap,
    "thm13": _thm13,
    "thm14": _thm14,
}


def run_check(name: str, order: int) -> VerificationReport:
    report = CHECKS[name](order)
    if report.name != name:
        report = VerificationReport(name, report.passed, report.order, report.witness,
                                    report.notes, report.resolution)
    return report


def verify_all(order: int = 8) -> list[VerificationReport]:
    if not 1 <= order <= 12:
        raise ValueError("order must lie in [1, 12]")
    return [run_check(name, order) for name in sorted(CHECKS)]
