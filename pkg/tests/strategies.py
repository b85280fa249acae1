"""Hypothesis strategies shared by the unit tests."""
from fractions import Fraction

from hypothesis import strategies as st

from m5index.series import ExponentVector, TruncatedSeries

small = st.integers(min_value=-3, max_value=3)
coeffs = st.one_of(st.integers(-4, 4), st.fractions(min_value=-3, max_value=3, max_denominator=4))


def exponents(min_c2=0, max_c2=8):
    return st.builds(ExponentVector, small, small, small, st.integers(min_c2, max_c2))


def series(min_c2=0, max_c2=8, order2=10, max_size=5):
    return st.dictionaries(exponents(min_c2, max_c2), coeffs, max_size=max_size).map(
        lambda d: TruncatedSeries(d, order2))


def positive_series(order2=10, max_size=4):
    """Sparse series with strictly positive q-order, as pexp requires."""
    return series(1, 8, order2, max_size)


def integer_positive_series(order2=10, max_size=4):
    return st.dictionaries(exponents(1, 8), st.integers(-3, 3), max_size=max_size).map(
        lambda d: TruncatedSeries(d, order2))


__all__ = ["series", "positive_series", "integer_positive_series", "exponents", "Fraction"]
