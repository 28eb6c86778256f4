"""Exception hierarchy shared by every module of the package."""


class TautError(Exception):
    """Base class for all errors raised by tautcurve."""


class UsageError(TautError, ValueError):
    """Operands or arguments that do not fit together (variable, order, rank...)."""


class NonUnitConstant(TautError, ArithmeticError):
    """A series or ring element had to be inverted but is not a unit."""


class BadConstantTerm(TautError, ValueError):
    """exp/log/pow/compose precondition on the constant term was violated."""


class NotReversible(TautError, ValueError):
    """Series reversion needs constant term 0 and a unit linear coefficient."""


class NotLaurent(TautError, ArithmeticError):
    """A rational function whose reduced denominator is not a monomial."""


class DegenerateFixture(TautError, ValueError):
    """Fixture data that cannot define a torus action with isolated fixed points."""


class EquivarianceLeak(TautError, ArithmeticError):
    """A quantity expected to be constant in the equivariant parameter is not."""


class NegativeWeightUnsupported(TautError, ValueError):
    """Negative bundle weight where a q-adic truncation would be unsound."""
