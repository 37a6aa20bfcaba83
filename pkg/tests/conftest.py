from fractions import Fraction

from hypothesis import strategies as st

from sp4states.scalar import RootSum, canonicalize_root

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicands = st.sampled_from([1, 2, 3, 5, 6, 7, 10])


@st.composite
def root_sums(draw, max_terms=3, pool=None):
    pool = radicands if pool is None else pool
    out = RootSum()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + canonicalize_root(draw(fractions), draw(pool))
    return out


def q2(draw_frac=fractions):
    """Strategy for elements of Q(sqrt 2)."""
    return st.builds(lambda a, b: RootSum.coerce(a) + canonicalize_root(b, 2), draw_frac, draw_frac)


F = Fraction
