"""Sparse multivariate polynomials with exact rational coefficients.

Used for the symbolic quantities of the generating series (degree ``d``,
Euler number ``e``, the Lambda-variable ``y``, the exponents ``a, b, c`` ...).
Terms are stored as ``{exponent tuple: Fraction}`` over a declared tuple of
variable names.  Operands with different variable sets are aligned on the
union of their variables, so ``d + e`` just works.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import NonUnitConstant
from .scalars import format_scalar

_SCALARS = (int, Fraction)


class Polynomial:
    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None,
                 variables: Sequence[str] = ()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent tuple does not match variables")
            if any(x < 0 for x in exps):
                raise ValueError("negative exponent in polynomial")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    # construction ----------------------------------------------------------

    @classmethod
    def gen(cls, name: str, variables: Sequence[str] | None = None) -> "Polynomial":
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        return cls({exps: 1}, variables)

    @classmethod
    def gens(cls, *names: str) -> tuple["Polynomial", ...]:
        return tuple(cls.gen(n, names) for n in names)

    @classmethod
    def constant(cls, c, variables: Sequence[str] = ()) -> "Polynomial":
        return cls({(0,) * len(variables): c}, variables)

    # inspection ------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self._terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self._terms))

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded lexicographic order, leading term first."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]),
                      reverse=True)

    def __bool__(self):
        return bool(self._terms)

    # alignment -------------------------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * len(variables)
            for v, x in zip(self.variables, exps):
                if x:
                    if v not in index:
                        raise ValueError(f"variable {v!r} dropped while in use")
                    new[index[v]] = x
            terms[tuple(new)] = c
        return Polynomial(terms, variables)

    def _coerce(self, other) -> tuple["Polynomial", "Polynomial"] | None:
        if isinstance(other, _SCALARS):
            return self, Polynomial.constant(other, self.variables)
        if isinstance(other, Polynomial):
            if other.variables == self.variables:
                return self, other
            union = self.variables + tuple(v for v in other.variables
                                           if v not in self.variables)
            return self.with_variables(union), other.with_variables(union)
        return None

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = dict(a._terms)
        for exps, c in b._terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(terms, a.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] + (-pair[1])

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[1] + (-pair[0])

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Polynomial({e: c * other for e, c in self._terms.items()},
                              self.variables)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms: dict = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return Polynomial(terms, a.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        if isinstance(other, Polynomial):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int):
                return self.inverse() ** (-k)
            return NotImplemented
        result = Polynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Polynomial":
        if self.is_constant() and self:
            return Polynomial.constant(1 / self.constant_term(), self.variables)
        raise NonUnitConstant(f"{self} is not a unit in Q[{','.join(self.variables)}]")

    # evaluation ------------------------------------------------------------

    def subs(self, values: Mapping[str, object]) -> "Polynomial | Fraction":
        """Substitute ring elements for some or all variables.

        Returns a Polynomial in the remaining variables (or in the variables
        of the substituted values); unmentioned variables stay symbolic.
        """
        keep = tuple(v for v in self.variables if v not in values)
        result = Polynomial({}, keep)
        for exps, c in self._terms.items():
            term = Polynomial({tuple(x for v, x in zip(self.variables, exps)
                                     if v not in values): c}, keep)
            for v, x in zip(self.variables, exps):
                if x and v in values:
                    term = term * (values[v] ** x)
            result = result + term
        return result

    def __call__(self, **values):
        out = self.subs(values)
        if isinstance(out, Polynomial) and out.is_constant():
            return out.constant_term()
        return out

    # comparison / display -------------------------------------------------

    def _canonical(self):
        return frozenset(
            (tuple((v, x) for v, x in zip(self.variables, e) if x), c)
            for e, c in self._terms.items())

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_term() == other
        if isinstance(other, Polynomial):
            return self._canonical() == other._canonical()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(self._canonical())
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(v if x == 1 else f"{v}^{x}"
                            for v, x in zip(self.variables, exps) if x)
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
        return f"Polynomial({self}; {','.join(self.variables)})"
