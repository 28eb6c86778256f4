"""Univariate rational functions over Q in reduced normal form.

Numerator and denominator are dense coefficient tuples (lowest degree first),
coprime, with a monic denominator; two equal values therefore have identical
representations and equality is a tuple comparison.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import NonUnitConstant, NotLaurent
from .laurent import LaurentPolynomial
from .polynomial import Polynomial

_SCALARS = (int, Fraction)

Dense = tuple  # tuple[Fraction, ...], index = exponent


def _trim(p) -> Dense:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _add(a: Dense, b: Dense) -> Dense:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a: Dense) -> Dense:
    return tuple(-c for c in a)


def _mul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _scale(a: Dense, c) -> Dense:
    return _trim(x * c for x in a)


def _divmod(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            f = c / lead
            quot[i - db] = f
            for j, y in enumerate(b):
                rem[i - db + j] -= f * y
    return _trim(quot), _trim(rem[:db])


def _valuation(a: Dense) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("valuation of zero")


def _is_monomial(a: Dense) -> bool:
    return sum(1 for c in a if c) == 1


def _monic(a: Dense) -> Dense:
    return _scale(a, 1 / a[-1])


def _gcd(a: Dense, b: Dense) -> Dense:
    """Monic gcd; the monomial fast path covers the localization denominators."""
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    if _is_monomial(a) or _is_monomial(b):
        k = min(_valuation(a), _valuation(b))
        return (Fraction(0),) * k + (Fraction(1),)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


class RationalFunction:
    __slots__ = ("var", "_num", "_den")

    def __init__(self, num=(), den=(1,), var: str = "t", _reduced: bool = False):
        self.var = var
        num = _trim(Fraction(c) for c in num)
        den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self._num, self._den = (), (Fraction(1),)
            return
        if not _reduced:
            g = _gcd(num, den)
            if len(g) > 1:
                num = _divmod(num, g)[0]
                den = _divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num, den = _scale(num, 1 / lead), _scale(den, 1 / lead)
        self._num, self._den = num, den

    # construction ----------------------------------------------------------

    @classmethod
    def gen(cls, var: str = "t") -> "RationalFunction":
        return cls((0, 1), (1,), var, _reduced=True)

    @classmethod
    def constant(cls, c, var: str = "t") -> "RationalFunction":
        return cls((c,), (1,), var, _reduced=True)

    @classmethod
    def monomial(cls, coeff, exponent: int, var: str = "t") -> "RationalFunction":
        coeff = Fraction(coeff)
        if exponent >= 0:
            return cls((0,) * exponent + (coeff,), (1,), var, _reduced=True)
        return cls((coeff,), (0,) * (-exponent) + (1,), var, _reduced=True)

    @classmethod
    def from_laurent(cls, f: LaurentPolynomial) -> "RationalFunction":
        if not f:
            return cls((), (1,), f.var)
        lo = min(f.min_degree(), 0)
        hi = f.max_degree()
        num = [Fraction(0)] * (hi - lo + 1)
        for k, c in f.terms.items():
            num[k - lo] = c
        den = (0,) * (-lo) + (1,)
        return cls(num, den, f.var)

    @classmethod
    def from_polynomial(cls, p: Polynomial, var: str | None = None) -> "RationalFunction":
        used = p.used_variables()
        var = var or (used[0] if used else "t")
        if any(v != var for v in used):
            raise ValueError("only univariate polynomials convert to RationalFunction")
        deg = max(p.degree(var), 0) if var in p.variables else 0
        dense = [Fraction(0)] * (deg + 1)
        for exps, c in p.terms.items():
            k = exps[p.variables.index(var)] if var in p.variables else 0
            dense[k] += c
        return cls(dense, (1,), var)

    # inspection ------------------------------------------------------------

    @property
    def numerator(self) -> Polynomial:
        return Polynomial({(i,): c for i, c in enumerate(self._num)}, (self.var,))

    @property
    def denominator(self) -> Polynomial:
        return Polynomial({(i,): c for i, c in enumerate(self._den)}, (self.var,))

    @property
    def dense(self) -> tuple[Dense, Dense]:
        return self._num, self._den

    def is_polynomial(self) -> bool:
        return len(self._den) == 1

    def is_laurent(self) -> bool:
        return _is_monomial(self._den)

    def to_laurent(self) -> LaurentPolynomial:
        """Exact Laurent expansion; NotLaurent if the denominator is not c*v^k."""
        if not self.is_laurent():
            raise NotLaurent(f"denominator {self.denominator} of {self} is not a monomial")
        shift = len(self._den) - 1
        return LaurentPolynomial({i - shift: c for i, c in enumerate(self._num) if c},
                                 self.var)

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._num[0] if self._num else Fraction(0)

    def evaluate(self, value):
        def ev(p):
            acc = Fraction(0)
            for c in reversed(p):
                acc = acc * value + c
            return acc
        d = ev(self._den)
        if not d:
            raise ZeroDivisionError(f"pole of {self} at {self.var}={value}")
        return ev(self._num) / d

    def __bool__(self):
        return bool(self._num)

    # arithmetic ------------------------------------------------------------

    def _other(self, other):
        if isinstance(other, _SCALARS):
            return RationalFunction.constant(other, self.var)
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction.from_laurent(other) if other.var == self.var else None
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o._num:
            return self
        if not self._num:
            return o
        if self._den == o._den:
            return RationalFunction(_add(self._num, o._num), self._den, self.var)
        g = _gcd(self._den, o._den)
        b = _divmod(self._den, g)[0]
        d = _divmod(o._den, g)[0]
        num = _add(_mul(self._num, d), _mul(o._num, b))
        return RationalFunction(num, _mul(self._den, d), self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_neg(self._num), self._den, self.var, _reduced=True)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return RationalFunction((), (1,), self.var)
            return RationalFunction(_scale(self._num, Fraction(other)), self._den,
                                    self.var, _reduced=True)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self._num or not o._num:
            return RationalFunction((), (1,), self.var)
        # cross-cancel first so the products stay small
        g1 = _gcd(self._num, o._den)
        g2 = _gcd(o._num, self._den)
        a, d = _divmod(self._num, g1)[0], _divmod(o._den, g1)[0]
        c, b = _divmod(o._num, g2)[0], _divmod(self._den, g2)[0]
        return RationalFunction(_mul(a, c), _mul(b, d), self.var, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self._num:
            raise NonUnitConstant("zero is not invertible")
        return RationalFunction(self._den, self._num, self.var, _reduced=True)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        num, den = (Fraction(1),), (Fraction(1),)
        for _ in range(k):
            num, den = _mul(num, self._num), _mul(den, self._den)
        return RationalFunction(num, den, self.var, _reduced=True)

    # comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if isinstance(other, RationalFunction):
            return (self.var, self._num, self._den) == (other.var, other._num, other._den)
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.var, self._num, self._den))

    def __str__(self):
        num = str(self.numerator)
        if self.is_polynomial():
            return num
        den = str(self.denominator)
        if len([c for c in self._num if c]) > 1:
            num = f"({num})"
        if len([c for c in self._den if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"
