import pytest

from sp4states.chargen import (
    FAMILIES, dim, dimension_identities, expand_branching, expand_branching_cell, expand_character,
    weights, weyl_dim,
)


@pytest.mark.parametrize("a, b, d", [(1, 0, 4), (0, 1, 5), (2, 0, 10), (0, 2, 14), (1, 1, 16)])
def test_named_dimensions(a, b, d):
    assert dim(a, b) == d


def test_weyl_box():
    for a in range(7):
        for b in range(7):
            assert dim(a, b) == weyl_dim(a, b), (a, b)


def test_expansion_tables_agree():
    table = expand_character(3, 3)
    for a in range(4):
        for b in range(4):
            cell = {(m2, z2): n for (a_, b_, m2, z2), n in table.items() if (a_, b_) == (a, b)}
            assert cell == weights(a, b)
    br = expand_branching(3, 3)
    assert {k[2:]: n for k, n in br.items() if k[:2] == (2, 1)} == expand_branching_cell(2, 1)


def test_weights_are_symmetric():
    for a, b in [(1, 1), (2, 1), (0, 3)]:
        w = weights(a, b)
        assert all(w[(-m, -z)] == n for (m, z), n in w.items())


def test_family_count_and_identities():
    assert len(FAMILIES) == 5
    for name, (lhs, rhs) in dimension_identities().items():
        assert lhs == rhs, name
