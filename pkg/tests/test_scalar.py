from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions, q2, root_sums
from sp4states.errors import NonInvertibleScalar, NotSingleTerm
from sp4states.scalar import (
    ONE, SQRT2, ZERO, RootSum, canonicalize_root, signed_sqrt, squarefree_split,
)


@pytest.mark.parametrize("n, split", [(1, (1, 1)), (12, (2, 3)), (72, (6, 2)), (105, (1, 105)), (49, (7, 1))])
def test_squarefree_split(n, split):
    assert squarefree_split(n) == split


def test_canonical_forms():
    assert canonicalize_root(1, 8) == canonicalize_root(2, 2)
    assert canonicalize_root(1, F(21, 20)) == canonicalize_root(F(1, 10), 105)
    assert str(canonicalize_root(1, F(21, 20))) == "(1/10)*sqrt(105)"
    assert canonicalize_root(1, 0) == ZERO
    assert canonicalize_root(3, 4) == 6
    with pytest.raises(ValueError):
        canonicalize_root(1, -1)


def test_rendering():
    assert str(ZERO) == "0"
    assert str(RootSum.coerce(3) - SQRT2) == "3 - sqrt(2)"
    assert str(-canonicalize_root(2, 3)) == "-2*sqrt(3)"


@given(root_sums(), root_sums(), root_sums())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(root_sums(), root_sums())
def test_hash_matches_equality(x, y):
    if x == y:
        assert hash(x) == hash(y)
    assert hash(x + y - y) == hash(x)


@given(q2())
def test_invert_subring(x):
    if x:
        assert x * x.invert() == ONE
        assert (ONE / x) * x == ONE


@given(root_sums(max_terms=2, pool=st.sampled_from([1, 3])))
def test_invert_two_radicands(x):
    if x:
        assert x * x.invert() == ONE


def test_invert_errors():
    with pytest.raises(NonInvertibleScalar):
        ZERO.invert()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(fractions, st.sampled_from([1, 2, 3, 6]))
def test_signed_sqrt_round_trip(c, r):
    x = canonicalize_root(c, r)
    sign, square = x.as_signed_sqrt()
    assert signed_sqrt(sign, square) == x
    assert square == c * c * r


def test_signed_sqrt_zero_and_sum():
    assert ZERO.as_signed_sqrt() == (1, 0)
    with pytest.raises(NotSingleTerm):
        (ONE + SQRT2).as_signed_sqrt()


@given(root_sums())
def test_json_round_trip(x):
    assert RootSum.from_json(x.to_json()) == x


@given(root_sums())
def test_sign_agrees_with_float(x):
    if x:
        assert x.sign() == (1 if float(x) > 0 else -1)


def test_sign_of_near_cancellation():
    # 99/70 lies just above sqrt(2), 140/99 just below
    assert (SQRT2 - F(99, 70)).sign() == -1
    assert (SQRT2 - F(140, 99)).sign() == 1


def test_power_and_rational_views():
    assert SQRT2 ** 2 == 2
    assert (SQRT2 ** 3).radicands() == (2,)
    assert (ONE + SQRT2).rational_part() == 1
    assert (ONE + SQRT2).coefficient(2) == 1
    assert RootSum.coerce(F(3, 4)).to_fraction() == F(3, 4)
    assert RootSum.coerce(F(3, 4)) == F(3, 4)
