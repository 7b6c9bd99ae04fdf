from fractions import Fraction

from hypothesis import strategies as st

from cyclotrig import CycloElement, totient

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
conductors = st.integers(1, 24)


@st.composite
def elements(draw, conductor=None):
    n = draw(conductors) if conductor is None else conductor
    coeffs = draw(st.lists(small_fractions, min_size=totient(n), max_size=totient(n)))
    return CycloElement(n, coeffs)


@st.composite
def element_pairs(draw):
    n = draw(conductors)
    return draw(elements(n)), draw(elements(n))


@st.composite
def element_triples(draw):
    n = draw(conductors)
    return draw(elements(n)), draw(elements(n)), draw(elements(n))
