"""Closed forms, functional equations and combinatorial identities.

Every check here computes the ground truth independently (localization or
direct expansion) and treats the displayed formula as a hypothesis.  Where a
formula admits several readings, all of them are tested and the report
records which one holds.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import (LaurentPolynomial, Polynomial, RationalFunction, TruncatedSeries,
                      binomial_generalized, binomial_scalar)
from .errors import NegativeWeightUnsupported, UsageError
from .localization import (TotalSegreX, equivariant_class_integral,
                           equivariant_euler_characteristic, p1_line)
from .report import CheckBuilder, VerificationReport
from .tautseries import chern_generating_series, extract_universal_coeffs, universal_series

D_E = ("d", "e")
INDISTINGUISHABLE = "indistinguishable on this case"


def _symbols():
    return Polynomial.gens(*D_E)


def _k(order: int, var: str = "k") -> TruncatedSeries:
    return TruncatedSeries.gen(order, var)


def invert_z_k(r: int, N: int) -> TruncatedSeries:
    """k(z) with z = k (1-k)^r."""
    if r < 0:
        raise UsageError("r must be nonnegative")
    k = _k(N)
    return (k * (1 - k) ** r).reversion().rename("z")


def closed_form_series(r: int, d, e, N: int) -> TruncatedSeries:
    """(1-k)^((r+1)e/2 + d) / (1-(r+1)k)^(e/2) with z = k(1-k)^r."""
    k = _k(N)
    f = (1 - k).pow_scalar((r + 1) * e * Fraction(1, 2) + d) * \
        (1 - k * (r + 1)).pow_scalar(-e * Fraction(1, 2))
    return f.compose(invert_z_k(r, N))


def segre_closed_form_series(d, e, N: int) -> TruncatedSeries:
    return closed_form_series(1, d, e, N)


def segre_exponential_form(d, e, N: int) -> TruncatedSeries:
    """exp(sum z^n/n (-binom(2n-1,n-1) d + (4^(n-1) - binom(2n-1,n-1)) e))."""
    zero = (d + e) * 0
    terms = [zero]
    for n in range(1, N + 1):
        c = comb(2 * n - 1, n - 1)
        terms.append((d * (-c) + e * (4 ** (n - 1) - c)) * Fraction(1, n))
    return TruncatedSeries(terms, N, "z").exp()


def verify_thm14(N: int, d_range=range(-3, 4)) -> VerificationReport:
    b = CheckBuilder("thm14", N)
    d, e = _symbols()
    expo = segre_exponential_form(d, e, N)
    closed = segre_closed_form_series(d, e, N)
    b.compare(expo.coeffs, closed.coeffs, "exponential vs closed form in Q[d,e]")
    for dv in d_range:
        loc = chern_generating_series(p1_line(dv), -1, N)
        b.compare([c(d=dv, e=2) for c in expo.coeffs], loc.coeffs,
                  f"exponential form at (d,e)=({dv},2) vs localization")
        b.compare([c(d=dv, e=2) for c in closed.coeffs], loc.coeffs,
                  f"closed form at (d,e)=({dv},2) vs localization")
    b.note(f"symbolic in (d,e); specialized for d in [{min(d_range)}, {max(d_range)}], e=2")
    return b.build()


def _functional_solution(r: int, N: int, plus_t: bool, target) -> TruncatedSeries:
    """F(z) solving F(-t(1 -+ t)^r) = target(t)."""
    t = _k(N, "t")
    arg = -t * ((1 + t) if plus_t else (1 - t)) ** r
    return target(t).compose(arg.reversion().rename("z"))


def marian_oprea_series(r: int, N: int) -> VerificationReport:
    """C(z), D(z) from their functional equations vs the extracted C_n, D_n."""
    if r < 1:
        raise UsageError("r must be at least 1")
    b = CheckBuilder("marian_oprea", N)
    coeffs = extract_universal_coeffs(r, -1, N)
    half = Fraction(1, 2)
    targets = {
        "C": (lambda t: -(1 + t).log(), coeffs.first),
        "D": (lambda t: (1 + t).log().scale(Fraction(r + 1, 2))
              - (1 + t * (r + 1)).log().scale(half), coeffs.second),
    }
    for name, (target, extracted) in targets.items():
        truth = [Fraction(0)] + [v / n for n, v in enumerate(extracted, 1)]
        matches = []
        for label, plus_t in (("-t(1+t)^r", True), ("-t(1-t)^r", False)):
            series = _functional_solution(r, N, plus_t, target)
            if list(series.coeffs) == truth:
                matches.append(label)
        if len(matches) == 1:
            b.resolution[f"{name} argument (r={r})"] = matches[0]
        else:
            series = _functional_solution(r, N, True, target)
            b.compare(series.coeffs, truth, f"{name}: argument readings matched {matches}")
            b.require(False, f"{name}: argument readings matched {matches}", "ambiguous",
                      "ambiguous")
    d, e = _symbols()
    b.compare(closed_form_series(r, d, e, N).coeffs,
              universal_series(coeffs, d, e, N).coeffs,
              f"closed form vs universal Segre series, r={r}")
    return b.build()


def lehn_surface_function(N: int) -> TruncatedSeries:
    """z(k) = k(1-k)(1-2k)^4 / (1-6k+6k^2)^3 as a series in k."""
    k = _k(N)
    return k * (1 - k) * (1 - k * 2) ** 4 * ((1 - k * 6 + k * k * 6) ** 3).reciprocal()


def lehn_surface_inverse(N: int) -> TruncatedSeries:
    if N < 3:
        raise UsageError("N must be at least 3")
    return lehn_surface_function(N).reversion().rename("z")


def lehn_closed_form(a, b, c, N: int) -> TruncatedSeries:
    """(1-k)^a (1-2k)^b (1-6k+6k^2)^(-c) in terms of z, a, b, c ring elements."""
    k = _k(N)
    f = (1 - k).pow_scalar(a) * (1 - k * 2).pow_scalar(b) * \
        (1 - k * 6 + k * k * 6).pow_scalar(-c)
    return f.compose(lehn_surface_inverse(N))


def verify_lehn_inverse(N: int) -> VerificationReport:
    N = max(N, 3)
    b = CheckBuilder("lehn_inverse", N)
    k = lehn_surface_inverse(N)
    b.compare(k.coeffs[:4], [0, 1, -9, 94], "k = z - 9z^2 + 94z^3 - ...")
    z = lehn_surface_function(N)
    b.compare(z.compose(k.rename("k")).coeffs, _k(N).coeffs, "z(k(z)) = z")
    return b.build()


def ogf_A001791_check(N: int) -> VerificationReport:
    """sum binom(2n-2,n) z^n = (1 - 2z + sqrt(1-4z)) / (2 sqrt(1-4z))."""
    if N < 4:
        raise UsageError("N must be at least 4")
    b = CheckBuilder("a001791", N)
    z = TruncatedSeries.gen(N)
    lhs = TruncatedSeries([binomial_generalized(2 * n - 2, n) for n in range(N + 1)], N)
    root = (1 - z * 4).pow_scalar(Fraction(1, 2))
    rhs = (1 - z * 2 + root) * (root * 2).reciprocal()
    b.compare(lhs.coeffs, rhs.coeffs, "coefficients vs closed generating function")
    k = _k(N)
    b.compare(lhs.compose(k * (1 - k)).coeffs,
              ((1 - k) ** 2 * (1 - k * 2).reciprocal()).coeffs,
              "z = k(1-k) substitution vs (1-k)^2/(1-2k)")
    return b.build()


def _nnd_denominator(n: int, d: int, sign: int, order: int) -> TruncatedSeries:
    """prod_{i<n} (1 + sign (d-i) x t)(1 - i x t) as an x-series over Q[t]."""
    x = TruncatedSeries.gen(order, "x")
    t = LaurentPolynomial.monomial(1, 1, "t")
    out = TruncatedSeries([LaurentPolynomial({0: 1}, "t")], order, "x")
    for i in range(n):
        out = out * (1 + x.scale(t * (sign * (d - i)))) * (1 - x.scale(t * i))
    return out


def lemma_Nnd_rational_identity(n: int, d: int) -> VerificationReport:
    """Localization x-series of N_n^d(t) against both denominator sign readings.

    Both sides are rational in x with denominators of degree <= 2n, so
    agreement through x^(4n+2) after clearing the candidate denominator is an
    exact identity, not just a truncated one.
    """
    if not 1 <= n <= 8:
        raise UsageError("n must be in [1, 8]")
    order = 4 * n + 2
    b = CheckBuilder("lemma_nnd", order)
    loc = equivariant_class_integral(p1_line(d), n, TotalSegreX(), order=order)
    loc = loc.map(lambda c: c.to_laurent())
    expected = binomial_generalized(2 * n - 2 - d, n)
    b.compare([loc[n]], [expected], f"x^{n} coefficient, n={n}, d={d}")
    target = [LaurentPolynomial({0: expected if i == n else 0}, "t") for i in range(order + 1)]
    held = []
    for label, sign in (("(1-(d-i)xt)", -1), ("(1+(d-i)xt)", 1)):
        cleared = loc * _nnd_denominator(n, d, sign, order)
        if list(cleared.coeffs) == target:
            held.append(label)
    if len(held) == 1:
        b.resolution["denominator"] = held[0]
    elif len(held) == 2:
        # the two candidates coincide here (N_n^d = 0, or {d-i} symmetric under sign)
        b.resolution["denominator"] = INDISTINGUISHABLE
    else:
        b.require(False, f"denominator readings matched {held} (n={n}, d={d})", len(held), 1)
    return b.build()


def _uniform(name: str, key: str, reports: list[VerificationReport],
             order: int) -> VerificationReport:
    """Merge per-case reports and require one reading across all decisive cases."""
    b = CheckBuilder(name, order)
    decided = set()
    for r in reports:
        b.absorb(r)
        value = r.resolution.get(key)
        if value is not None and value != INDISTINGUISHABLE:
            decided.add(value)
    b.resolution.pop(key, None)
    if len(decided) == 1:
        b.resolution[key] = decided.pop()
    else:
        b.require(False, f"{key}: decisive cases resolved to {sorted(decided)}",
                  len(decided), 1)
    skipped = sum(1 for r in reports if r.resolution.get(key) == INDISTINGUISHABLE)
    b.note(f"{len(reports)} cases, {skipped} non-discriminating")
    return b.build()


def verify_lemma_nnd(n_max: int = 8, d_range=range(-3, 4)) -> VerificationReport:
    reports = [lemma_Nnd_rational_identity(n, d)
               for n in range(1, n_max + 1) for d in d_range]
    return _uniform("lemma_nnd", "denominator", reports, n_max)


def chu_vandermonde_check(n: int, d: int) -> VerificationReport:
    """sum_k binom(-y+n-1, n-k) binom(y+n-1-d, k) = binom(2n-2-d, n) in Q[y]."""
    if n < 0:
        raise UsageError("n must be nonnegative")
    y = Polynomial.gen("y")
    lhs = sum((binomial_scalar(-y + n - 1, n - k) * binomial_scalar(y + n - 1 - d, k)
               for k in range(n + 1)), Polynomial({}, ("y",)))
    rhs = binomial_generalized(2 * n - 2 - d, n)
    b = CheckBuilder("chu_vandermonde", n)
    b.require(lhs == rhs, f"n={n}, d={d}", lhs, rhs, n)
    return b.build()


def _q_series(coeffs, Nq: int) -> TruncatedSeries:
    return TruncatedSeries(coeffs, Nq, "q")



def lambda_y_identity_check(Nz: int, Nq: int, a: int) -> VerificationReport:
    """Product form vs exponential form of the affine-line Lambda_{-y} series.

    Coefficient ring: Q[y][[q]] truncated at q^Nq; outer series in z.  Also
    checks the already-taken beta -> 0 limit over Q(t).
    """
    if a < 0:
        raise NegativeWeightUnsupported("weight a must be nonnegative for q-truncation")
    if Nz > 8 or Nq > 16:
        raise UsageError("Nz <= 8 and Nq <= 16")
    y = Polynomial.gen("y")
    zero = Polynomial({}, ("y",))
    one = _q_series([zero + 1], Nq)

    def q_pow(m: int) -> TruncatedSeries:
        return _q_series([zero] * m + [zero + 1], Nq)

    b = CheckBuilder("lambda_y", Nz)
    # product side: prod_{i<=n} (1 - y q^(a+i-1)) / (1 - q^i)
    lhs, running = [one], one
    for n in range(1, Nz + 1):
        running = running * (one - q_pow(a + n - 1).scale(y)) * (one - q_pow(n)).reciprocal()
        lhs.append(running)
    # exponential side: exp(sum z^n/n (1 - q^(na) y^n) / (1 - q^n))
    expo = [one.scale(0)]
    for n in range(1, Nz + 1):
        expo.append(((one - q_pow(n * a).scale(y ** n)) * (one - q_pow(n)).reciprocal())
                    .scale(Fraction(1, n)))
    rhs = TruncatedSeries(expo, Nz, "z").exp()
    b.compare(lhs, rhs.coeffs, f"identity in Q[y][[q]]/q^{Nq + 1}, a={a}")
    b.absorb(beta_limit_check(max(Nz, 8), a))
    return b.build()


def beta_limit_check(N: int, a: int) -> VerificationReport:
    """sum z^n prod (1+at+(i-1)t)/(it) = exp(sum z^n/n (1+at)/t) = (1-z)^(-(1+at)/t)."""
    t = RationalFunction.gen("t")
    b = CheckBuilder("beta_limit", N)
    prod_side, running = [RationalFunction.constant(1)], RationalFunction.constant(1)
    for i in range(1, N + 1):
        running = running * (1 + t * a + t * (i - 1)) / (t * i)
        prod_side.append(running)
    w = (1 + t * a) / t
    expo = TruncatedSeries([RationalFunction.constant(0)] +
                           [w * Fraction(1, n) for n in range(1, N + 1)], N).exp()
    binom_form = (1 - TruncatedSeries.gen(N)).pow_scalar(-w)
    b.compare(prod_side, expo.coeffs, f"product vs exponential over Q(t), a={a}")
    b.compare(expo.coeffs, binom_form.coeffs, f"exponential vs (1-z)^(-(1+at)/t), a={a}")
    return b.build()


def prop33_lhs(d: int, N: int) -> TruncatedSeries:
    """sum_n z^n chi((P^1)^[n], Lambda_{-y} L_d^[n]) with coefficients in Q[y]."""
    y = Polynomial.gen("y")
    terms = []
    for n in range(N + 1):
        chi = equivariant_euler_characteristic(p1_line(d), n)
        poly = Polynomial({}, ("y",))
        for k, c in enumerate(chi.coeffs):
            poly = poly + y ** k * c.to_laurent().evaluate(1)
        terms.append(poly)
    return TruncatedSeries(terms, N, "z")


def prop33_probe(d: int, N: int) -> VerificationReport:
    """Which right side (plain sum or exponential) does the Lefschetz sum match?"""
    if N > 6:
        raise UsageError("N is capped at 6")
    y = Polynomial.gen("y")
    lhs = prop33_lhs(d, N)
    chi_curve = [1 - y ** n * (d + 1) for n in range(N + 1)]
    plain = TruncatedSeries([Polynomial.constant(1, ("y",))] + chi_curve[1:], N)
    expo = TruncatedSeries([Polynomial({}, ("y",))] +
                           [chi_curve[n] * Fraction(1, n) for n in range(1, N + 1)], N).exp()
    b = CheckBuilder("prop33", N)
    held = [label for label, cand in (("plain sum", plain), ("exponential", expo))
            if cand == lhs]
    if len(held) == 1:
        b.resolution["right side"] = held[0]
    elif len(held) == 2:
        # happens for d = -1, where chi(L_d) = 0 and both readings give 1/(1-z)
        b.resolution["right side"] = INDISTINGUISHABLE
    else:
        b.compare(lhs.coeffs, expo.coeffs, f"d={d}: Lefschetz sum vs exponential reading")
    return b.build()


def verify_prop33(N: int = 6, d_range=range(-2, 3)) -> VerificationReport:
    return _uniform("prop33", "right side", [prop33_probe(d, N) for d in d_range], N)


def secant_table(d: int, g: int, N: int) -> list[tuple[int, Fraction]]:
    """(-1)^n [z^n] of the rank one Segre series for degree d, genus g."""
    if g < 0:
        raise UsageError("genus must be nonnegative")
    s = universal_series(extract_universal_coeffs(1, -1, N), Fraction(d), Fraction(2 - 2 * g), N)
    return [(n, (-1) ** n * s[n]) for n in range(1, N + 1)]


def secant_node_check() -> VerificationReport:
    """n = 2 entry equals (d^2 - 3d + 2 - 2g)/2 as a polynomial in d, g."""
    d, e = _symbols()
    g = Polynomial.gen("g")
    s = universal_series(extract_universal_coeffs(1, -1, 2), d, e, 2)
    entry = s[2].subs({"e": 2 - g * 2})
    nodes = (d * d - d * 3 + 2 - g * 2) * Fraction(1, 2)
    b = CheckBuilder("secant_nodes", 2)
    b.require(entry == nodes, "n=2 secant count vs node formula", entry, nodes, 2)
    return b.build()
