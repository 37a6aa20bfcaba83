import pytest

from sp4states.basis import Kind, StateLabel, branch_labels
from sp4states.errors import InvalidLabel
from sp4states.matel.extract import extract_direct, extract_ordinary, extract_reduced, raise_factor
from sp4states.matel.gram import gram_block, wanted_part
from sp4states.matel.tables import formula_ordinary
from sp4states.basis import highest_state
from sp4states.poly import Poly, mono
from sp4states.scalar import canonicalize_root

PAIRS = [(a, b) for a in range(0, 5) for b in range(0, 5) if 1 <= a + b <= 4]


def test_xi_example():
    out = extract_ordinary(0, 1, 2, 0, 0)
    assert [(me.target.t2, me.target.m2, me.target.z2, me.value) for me in out] == [(0, 0, 2, 1)]


def test_no_target_gives_empty_list():
    assert extract_ordinary(0, 1, 0, 2, 0) == []
    assert extract_direct(0, 1, 0, 2, 0) == []


def test_invalid_source():
    with pytest.raises(InvalidLabel):
        extract_ordinary(1, 1, 7, 1, 0)


def test_raise_factor():
    assert raise_factor(2, -2, 2) == 2
    assert raise_factor(4, 2, 1) == canonicalize_root(1, 4)


@pytest.mark.parametrize("a, b", PAIRS)
@pytest.mark.parametrize("op", ["G-1", "Gb-1"])
def test_two_routes_agree(a, b, op):
    for lab in branch_labels(a, b):
        climbed = {me.target: me.value for me in extract_ordinary(a, b, lab.t2, lab.z2, lab.v, op)}
        single = {me.target: me.value for me in extract_direct(a, b, lab.t2, lab.z2, lab.v, op)}
        for target in set(climbed) | set(single):
            assert climbed.get(target, 0) == single.get(target, 0)


@pytest.mark.parametrize("a, b", [p for p in PAIRS if p[0] and p[1]])
def test_type_separation(a, b):
    for lab in branch_labels(a, b):
        for op in ("G-1", "Gb-1"):
            for me in extract_ordinary(a, b, lab.t2, lab.z2, lab.v, op):
                if {me.source.kind, me.target.kind} == {Kind.TYPE_I, Kind.TYPE_II}:
                    assert not me.value


@pytest.mark.parametrize("a, b", [p for p in PAIRS if not (p[0] and p[1])])
@pytest.mark.parametrize("op", ["G-1", "Gb-1"])
def test_degenerate_limits(a, b, op):
    for lab in branch_labels(a, b):
        found = extract_ordinary(a, b, lab.t2, lab.z2, lab.v, op)
        closed = formula_ordinary(a, b, lab.t2, lab.z2, lab.v, op)
        assert [(m.target, m.value) for m in found] == [(m.target, m.value) for m in closed]


def test_reduced_elements_drop_m():
    red = extract_reduced(2, 1, 2, 0, 0)
    assert all(r.target.m2 == r.target.t2 for r in red)
    assert {r.op for r in red} == {"G"}


def test_wanted_parts():
    hw = Poly.monomial(mono(alpha=2, xi=1))
    assert wanted_part(hw, 2, 1) == hw
    vs, gram = gram_block(1, 1, 1, -1)
    assert len(vs) == len(gram) == 1
    part = wanted_part(highest_state(StateLabel(1, 1, 1, -1, vs[0])), 1, 1)
    assert gram[0][0].sign() == 1 and part


def test_formula_rows_reject_generic_gbar():
    with pytest.raises(KeyError):
        formula_ordinary(1, 1, 1, 1, 0, "Gb-1")
