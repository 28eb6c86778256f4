"""Truncated power series in one named variable.

A ``TruncatedSeries`` of order N keeps the coefficients of v^0 .. v^N.  The
coefficients may live in any commutative Q-algebra that supports ``+ - *``,
``==``, multiplication by ``Fraction`` and (for unit inversion) either
``1/c`` for rationals or an ``inverse()`` method.  Fraction, Polynomial,
LaurentPolynomial, RationalFunction and TruncatedSeries itself all qualify,
so series over Q(t), over Q[d, e] or over Q[y][[q]] share one implementation.

Operands must agree on variable and order; a mismatch raises ``UsageError``
instead of silently truncating to the smaller order.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import BadConstantTerm, NonUnitConstant, NotReversible, UsageError

_SCALARS = (int, Fraction)


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c * 0 + 1


def unit_inverse(c):
    """Inverse of a ring element, NonUnitConstant if there is none."""
    if isinstance(c, _SCALARS):
        if not c:
            raise NonUnitConstant("zero constant term")
        return 1 / Fraction(c)
    inv = getattr(c, "inverse", None)
    if inv is None:
        raise NonUnitConstant(f"no inverse available for {c!r}")
    return inv()


def _is_zero(c) -> bool:
    return not c


class TruncatedSeries:
    __slots__ = ("var", "order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None, var: str = "z"):
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if order is None:
            if not coeffs:
                raise UsageError("order required for an empty coefficient list")
            order = len(coeffs) - 1
        if order < 0:
            raise UsageError("order must be nonnegative")
        zero = _zero_like(coeffs[0]) if coeffs else Fraction(0)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.var = var
        self.order = order
        self.coeffs = tuple(coeffs)

    # construction ----------------------------------------------------------

    @classmethod
    def gen(cls, order: int, var: str = "z") -> "TruncatedSeries":
        """The series ``var`` itself."""
        return cls([0, 1], order, var) if order >= 1 else cls([0], order, var)

    @classmethod
    def constant(cls, c, order: int, var: str = "z") -> "TruncatedSeries":
        return cls([c], order, var)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int,
                      var: str = "z") -> "TruncatedSeries":
        return cls([fn(n) for n in range(order + 1)], order, var)

    # inspection ------------------------------------------------------------

    def __getitem__(self, n: int):
        return self.coefficient(n)

    def coefficient(self, n: int):
        if n < 0:
            raise UsageError("negative exponent")
        if n > self.order:
            raise UsageError(f"coefficient {n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None

    def __bool__(self):
        return any(not _is_zero(c) for c in self.coeffs)

    def map(self, fn: Callable) -> "TruncatedSeries":
        """Apply ``fn`` to every coefficient (change of coefficient ring)."""
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order, self.var)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise UsageError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs, order, self.var)

    def rename(self, var: str) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, self.order, var)

    # ring operations -------------------------------------------------------

    def _is_series_operand(self, other) -> bool:
        """True for a same-ring series operand; False for a coefficient-ring scalar.

        A series in another variable counts as a scalar only when the
        coefficients are themselves series in that variable.
        """
        if not isinstance(other, TruncatedSeries):
            return False
        c = self.coeffs[0]
        if other.var != self.var and isinstance(c, TruncatedSeries) and c.var == other.var:
            return False
        self._check(other)
        return True

    def _check(self, other: "TruncatedSeries"):
        if other.var != self.var or other.order != self.order:
            raise UsageError(
                f"series mismatch: {self.var}/O({self.order + 1}) vs "
                f"{other.var}/O({other.order + 1})")

    def __add__(self, other):
        if self._is_series_operand(other):
            return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                                   self.order, self.var)
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:],
                               self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by the ring element ``c``."""
        return TruncatedSeries([c * a for a in self.coeffs], self.order, self.var)

    def __mul__(self, other):
        if not self._is_series_operand(other):
            return self.scale(other)
        a, b, n = self.coeffs, other.coeffs, self.order
        out = [None] * (n + 1)
        nz_b = [j for j in range(n + 1) if not _is_zero(b[j])]
        for i in range(n + 1):
            if _is_zero(a[i]):
                continue
            ai = a[i]
            for j in nz_b:
                if i + j > n:
                    break
                term = ai * b[j]
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        zero = _zero_like(a[0] * b[0])
        return TruncatedSeries([zero if c is None else c for c in out], n, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self._is_series_operand(other):
            return self * other.reciprocal()
        if isinstance(other, _SCALARS):
            return self.scale(1 / Fraction(other))
        return self.scale(unit_inverse(other))

    def __rtruediv__(self, other):
        return self.reciprocal().scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries([_one_like(self.coeffs[0])], self.order, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # calculus --------------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        """d/dvar; valid to order N-1, so the result has order N-1."""
        if self.order == 0:
            return TruncatedSeries([_zero_like(self.coeffs[0])], 0, self.var)
        return TruncatedSeries([self.coeffs[n] * n for n in range(1, self.order + 1)],
                               self.order - 1, self.var)

    def reciprocal(self) -> "TruncatedSeries":
        inv0 = unit_inverse(self.coeffs[0])
        a = self.coeffs
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = None
            for k in range(1, n + 1):
                if _is_zero(a[k]):
                    continue
                term = a[k] * out[n - k]
                acc = term if acc is None else acc + term
            out.append(_zero_like(inv0) if acc is None else -(acc * inv0))
        return TruncatedSeries(out, self.order, self.var)

    def inverse(self) -> "TruncatedSeries":
        return self.reciprocal()

    def exp(self) -> "TruncatedSeries":
        """exp(f) for f with zero constant term, via n g_n = sum k f_k g_{n-k}."""
        if not _is_zero(self.coeffs[0]):
            raise BadConstantTerm("exp needs a series with constant term 0")
        f = self.coeffs
        out = [_one_like(f[0])]
        for n in range(1, self.order + 1):
            acc = _zero_like(f[0])
            for k in range(1, n + 1):
                if not _is_zero(f[k]):
                    acc = acc + f[k] * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return TruncatedSeries(out, self.order, self.var)

    def log(self) -> "TruncatedSeries":
        """log(f) for f with constant term 1, via n h_n = n f_n - sum k h_k f_{n-k}."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs a series with constant term 1")
        f = self.coeffs
        out = [_zero_like(f[0])]
        for n in range(1, self.order + 1):
            acc = f[n] * n
            for k in range(1, n):
                if not _is_zero(out[k]) and not _is_zero(f[n - k]):
                    acc = acc - out[k] * f[n - k] * k
            out.append(acc * Fraction(1, n))
        return TruncatedSeries(out, self.order, self.var)

    def pow_scalar(self, alpha) -> "TruncatedSeries":
        """f**alpha = exp(alpha * log f) for a ring element alpha; f(0) must be 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("pow_scalar needs a series with constant term 1")
        return self.log().scale(alpha).exp()

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(w)) as a series in inner's variable (Horner scheme).

        ``inner`` must have constant term 0.  self.order may exceed
        inner.order; the result has inner's order.
        """
        if not isinstance(inner, TruncatedSeries):
            raise UsageError("compose expects a series argument")
        if not _is_zero(inner.coeffs[0]):
            raise BadConstantTerm("inner series of a composition needs constant term 0")
        if self.order < inner.order:
            raise UsageError(
                f"outer series known only to order {self.order}, "
                f"composition requested to order {inner.order}")
        n = inner.order
        zero_inner = inner.scale(0)
        acc = zero_inner + self.coeffs[n]
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return self.compose(inner)

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse g with f(g(v)) = v, by Newton iteration.

        Each pass k <- k - (f(k) - v)/f'(k) doubles the number of correct
        coefficients.
        """
        f = self
        if not _is_zero(f.coeffs[0]):
            raise NotReversible("constant term must be 0")
        if f.order < 1:
            raise NotReversible("order must be at least 1")
        try:
            inv1 = unit_inverse(f.coeffs[1])
        except NonUnitConstant as exc:
            raise NotReversible("linear coefficient is not a unit") from exc
        n = f.order
        v = TruncatedSeries([0, 1], n, f.var).map(lambda c: c * _one_like(f.coeffs[1]))
        # f' is exact only to order n-1; the padded top coefficient is only
        # ever multiplied by f(k) - v = O(v), so it never reaches order n
        fprime = TruncatedSeries(f.derivative().coeffs, n, f.var)
        k = v.scale(inv1)
        correct = 1
        while correct < n:
            k = k - (f.compose(k) - v) * fprime.compose(k).reciprocal()
            correct *= 2
        return k

    # comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            c = self.coeffs[0]
            if not (other.var != self.var and isinstance(c, TruncatedSeries)
                    and c.var == other.var):
                return (self.var, self.order) == (other.var, other.order) and \
                    all(a == b for a, b in zip(self.coeffs, other.coeffs))
        elif isinstance(other, (list, tuple, str)):
            return NotImplemented
        return self.coeffs[0] == other and not any(
            not _is_zero(c) for c in self.coeffs[1:])

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            text = str(c)
            if " " in text:
                text = f"({text})"
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            parts.append(text if not mono else (mono if text == "1" else f"{text}*{mono}"))
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


# functional spellings -------------------------------------------------------

def coefficient_extract(f: TruncatedSeries, n: int):
    return f.coefficient(n)


def series_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    return f.reciprocal()


def series_exp_log(f: TruncatedSeries, direction: str) -> TruncatedSeries:
    if direction == "exp":
        return f.exp()
    if direction == "log":
        return f.log()
    raise UsageError(f"direction must be 'exp' or 'log', not {direction!r}")


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    return f.exp()


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    return f.log()


def series_pow_scalar(f: TruncatedSeries, alpha) -> TruncatedSeries:
    return f.pow_scalar(alpha)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f.compose(g)


def series_reversion(f: TruncatedSeries) -> TruncatedSeries:
    return f.reversion()


def series(coeffs: Sequence, order: int | None = None, var: str = "z") -> TruncatedSeries:
    return TruncatedSeries(coeffs, order, var)
