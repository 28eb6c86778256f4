"""Univariate Laurent polynomials over Q (integer exponents of either sign)."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import NonUnitConstant
from .scalars import format_scalar

_SCALARS = (int, Fraction)


class LaurentPolynomial:
    __slots__ = ("var", "_terms")

    def __init__(self, terms: Mapping[int, object] | None = None, var: str = "t"):
        self.var = var
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(k)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, coeff, exponent: int, var: str = "t") -> "LaurentPolynomial":
        return cls({exponent: coeff}, var)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def min_degree(self) -> int | None:
        return min(self._terms, default=None)

    def max_degree(self) -> int | None:
        return max(self._terms, default=None)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def evaluate(self, value):
        if isinstance(value, int):
            value = Fraction(value)
        return sum((c * value ** k for k, c in self._terms.items()), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def _other(self, other):
        if isinstance(other, _SCALARS):
            return LaurentPolynomial({0: other}, self.var)
        if isinstance(other, LaurentPolynomial):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in o._terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPolynomial(terms, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self._terms.items()}, self.var)

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
            return LaurentPolynomial({k: c * other for k, c in self._terms.items()},
                                     self.var)
        o = self._other(other)
        if o is None:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in o._terms.items():
                terms[i + j] = terms.get(i + j, 0) + a * b
        return LaurentPolynomial(terms, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPolynomial":
        if len(self._terms) != 1:
            raise NonUnitConstant(f"{self} is not a monomial")
        (k, c), = self._terms.items()
        return LaurentPolynomial({-k: 1 / c}, self.var)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPolynomial({0: 1}, self.var)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_term() == other
        if isinstance(other, LaurentPolynomial):
            return self.var == other.var and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self.var, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if not mono:
                body = format_scalar(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_scalar(abs(c))}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"LaurentPolynomial({self})"
