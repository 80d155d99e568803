from fractions import Fraction

from hypothesis import strategies as st

from degenpoly.core import MPoly

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)

exponents = st.tuples(*[st.integers(0, 2)] * 4).filter(lambda e: sum(e) <= 6)


@st.composite
def mpolys(draw, max_terms=5):
    terms = draw(st.dictionaries(exponents, small_fractions, max_size=max_terms))
    return MPoly(terms)


def frac(a, b=1):
    return Fraction(a, b)
