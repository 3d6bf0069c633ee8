from hypothesis import strategies as st

from blowupcones import CurveClass, DivisorClass

small_ints = st.integers(-6, 6)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)

int_divisors = st.builds(
    DivisorClass, small_ints, st.tuples(*([small_ints] * 8))
)
rational_divisors = st.builds(
    DivisorClass, small_rationals, st.tuples(*([small_rationals] * 8))
)
curves = st.builds(
    CurveClass, st.integers(0, 6), st.tuples(*([st.integers(-4, 4)] * 8))
)
generator_letters = st.integers(0, 7)
words = st.lists(generator_letters, max_size=12).map(tuple)
