"""Exact algebra: rationals, polynomials, rational functions, truncated series."""
from .laurent import LaurentPolynomial
from .polynomial import Polynomial
from .ratfunc import RationalFunction
from .scalars import (binomial_generalized, binomial_scalar, format_scalar,
                      is_integral, parse_scalar, to_scalar)
from .series import (TruncatedSeries, coefficient_extract, series_compose, series_exp,
                     series_exp_log, series_log, series_pow_scalar, series_reciprocal,
                     series_reversion, unit_inverse)


def ratfunc_to_laurent(f: RationalFunction) -> LaurentPolynomial:
    """Laurent expansion of a reduced rational function (NotLaurent otherwise)."""
    return f.to_laurent()


__all__ = [
    "LaurentPolynomial", "Polynomial", "RationalFunction", "TruncatedSeries",
    "binomial_generalized", "binomial_scalar", "coefficient_extract", "format_scalar",
    "is_integral", "parse_scalar", "ratfunc_to_laurent", "series_compose", "series_exp",
    "series_exp_log", "series_log", "series_pow_scalar", "series_reciprocal",
    "series_reversion", "to_scalar", "unit_inverse",
]
