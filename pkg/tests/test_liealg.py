import pytest

from sp4states.liealg import (
    GENERATORS, G_M1, T_MINUS, T_PLUS, adjoint_check, all_monomials, apply, commutator,
    generator, hermitian_pairs, involution,
)
from sp4states.matel.verify import INVOLUTION_TABLE, _identities, _Images
from sp4states.poly import Poly, Var

MONOS = [Poly.monomial(m) for m in all_monomials(3)]


@pytest.mark.parametrize("name, lhs, rhs", _identities(_Images()), ids=lambda v: v if isinstance(v, str) else "")
def test_commutation_relations(name, lhs, rhs):
    for p in MONOS:
        assert lhs(p) == rhs(p), (name, str(p))


@pytest.mark.parametrize("name", sorted(INVOLUTION_TABLE))
def test_involution_conjugates_generators(name):
    image, sign = INVOLUTION_TABLE[name]
    for p in MONOS:
        assert involution(apply(GENERATORS[name], involution(p))) == apply(GENERATORS[image], p).scale(sign)


@pytest.mark.parametrize("op, conj, sign", hermitian_pairs(), ids=lambda v: getattr(v, "name", str(v)))
def test_adjoints(op, conj, sign):
    report = adjoint_check(op, conj, 3, sign)
    assert report.pairs_checked > 0
    assert report.ok, report.violations[:3]


def test_adjoint_check_detects_wrong_sign():
    assert not adjoint_check(T_PLUS, T_MINUS, 2, -1).ok


def test_g_minus_one_on_xi():
    assert apply(G_M1, Poly.var(Var.XI)) == Poly.var(Var.ETA)
    assert commutator(T_PLUS, T_PLUS, Poly.var(Var.ALPHA)) == Poly()


def test_unknown_generator():
    with pytest.raises(KeyError):
        generator("H")
