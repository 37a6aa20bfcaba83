from fractions import Fraction as F

import pytest

from sp4states.errors import InvalidLabel
from sp4states.matel import degenerate as dg
from sp4states.matel.direct import direct_me, direct_norm, direct_rme
from sp4states.liealg import G_0
from sp4states.poly import Poly, bargmann, mono
from sp4states.scalar import ZERO, canonicalize_root

r = lambda q: canonicalize_root(1, q)
h = F(1, 2)


@pytest.mark.parametrize("a, t, z, value", [(0, 0, 0, 1), (2, 1, 1, r(h)), (2, 0, 0, r(h))])
def test_norm_a0_examples(a, t, z, value):
    assert dg.norm_a0(a, t, z) == value


def test_norm_a0_against_pairings():
    alpha2 = Poly.monomial(mono(alpha=2))
    assert bargmann(alpha2, alpha2) == 2
    scalar = Poly({mono(alpha=1, delta=1): 1, mono(beta=1, gamma=1): -1})
    assert bargmann(scalar, scalar) == 2


@pytest.mark.parametrize("b, t, z, value", [(4, 0, 0, r(F(21, 20))), (1, 1, 0, 1), (0, 0, 0, 1)])
def test_norm_0b_examples(b, t, z, value):
    assert dg.norm_0b(b, t, z) == value


def test_norm_errors():
    with pytest.raises(InvalidLabel):
        dg.norm_a0(2, 2, 0)
    with pytest.raises(InvalidLabel):
        dg.norm_0b(2, 1, 0)


def test_rme_a0_examples():
    assert dg.rme_a0(2, 0, 0, 1) == r(3)
    assert dg.rme_a0(2, 1, -1, -1) == r(3)
    for a in (2, 3, 4):
        t = F(a, 2)
        assert dg.rme_a0(a, t, t, 0) == ZERO
    assert dg.rme_a0(2, 0, 0, 1) == direct_rme(2, 0, "G", 0, 0, 1)


@pytest.mark.parametrize("a", range(0, 6))
def test_a0_closed_forms_match_direct_action(a):
    ht = F(a, 2)
    labels = [(ht - k, z) for k in range(a // 2 + 1) for z in [ht - k - j for j in range(int(2 * (ht - k)) + 1)]]
    for t, z in labels:
        assert dg.norm_a0(a, t, z) == direct_norm(a, 0, t, z)
        for dt in (1, 0, -1):
            assert dg.rme_a0(a, t, z, dt) == direct_rme(a, 0, "G", t, z, dt)
            partner = dg.rme_a0(a, t + dt, z - 1, -dt) if dg.valid_a0(a, t + dt, z - 1) else ZERO
            assert direct_rme(a, 0, "Gb", t, z, dt) == dg.gbar_from_g_validated(dt, partner)
        t2, z2 = int(2 * t), int(2 * z)
        if dg.valid_a0(a, t, z + 1):
            d = direct_me(a, 0, G_0, (t2, t2, z2), (t2, t2, z2 + 2))
            assert dg.ordinary_a0_same(a, t, z) == d == dg.ordinary_a0_same_via_norms(a, t, z)
        if dg.valid_a0(a, t + 1, z + 1):
            d = direct_me(a, 0, G_0, (t2, t2, z2), (t2 + 2, t2, z2 + 2))
            assert dg.ordinary_a0_raise(a, t, z) == d == dg.ordinary_a0_raise_via_norms(a, t, z)


def test_only_one_factor_reading_survives():
    survivors = []
    for reading in dg.B_FACTOR_READINGS:
        ok = all(
            dg.ordinary_a0_same(a, F(a, 2), z, reading) == dg.ordinary_a0_same_via_norms(a, F(a, 2), z)
            for a in range(1, 6) for z in [F(a, 2) - 1 - j for j in range(a)]
        )
        if ok:
            survivors.append(reading)
    assert survivors == [dg.B_FACTOR_VALIDATED]


@pytest.mark.parametrize("b", range(0, 6))
def test_0b_closed_forms_match_direct_action(b):
    for t in range(b + 1):
        for z in range(-b, b + 1):
            if not dg.valid_0b(b, t, z):
                continue
            assert dg.norm_0b(b, t, z) == direct_norm(0, b, t, z)
            for dt in (1, -1):
                assert dg.rme_0b_g(b, t, z, dt) == direct_rme(0, b, "G", t, z, dt)
            for k in (1, 0, -1):
                partner = dg.rme_0b_g(b, t + k, z - 1, -k) if dg.valid_0b(b, t + k, z - 1) else ZERO
                assert direct_rme(0, b, "Gb", t, z, k) == dg.gbar_from_g_validated(k, partner)


def test_0b_printed_second_line_is_off_by_sqrt2():
    t, z, b = 1, -1, 2
    printed = dg.rme_0b(b, t, z, -1, printed=True)
    assert printed * printed * 2 == dg.rme_0b(b, t, z, -1) ** 2


def test_0b_vanishing_factor():
    for b in range(1, 5):
        for t in range(b + 1):
            z = b - t
            if dg.valid_0b(b, t, z):
                assert dg.rme_0b(b, t, z, 1) == ZERO


def test_0b_gbar_ordinary_forms():
    from sp4states.liealg import GB_M1
    for b in range(1, 5):
        for t in range(b + 1):
            for z in range(-b, b + 1):
                if not dg.valid_0b(b, t, z):
                    continue
                if dg.valid_0b(b, t + 1, z - 1):
                    d = direct_me(0, b, GB_M1, (2 * t, 2 * t, 2 * z), (2 * t + 2, 2 * t - 2, 2 * z - 2))
                    assert dg.ordinary_0b_gbar_raise(b, t, z) == d
                if t and dg.valid_0b(b, t - 1, z - 1):
                    d = direct_me(0, b, GB_M1, (2 * t, 2 * t, 2 * z), (2 * t - 2, 2 * t - 2, 2 * z - 2))
                    assert dg.ordinary_0b_gbar_lower(b, t, z) == d
                    assert dg.norm_ratio_0b(b, t, z) == dg.norm_0b(b, t, z) / dg.norm_0b(b, t - 1, z - 1)


def test_gbar_sign_rules():
    x = r(3)
    assert dg.gbar_from_g(0, x) == -x
    assert dg.gbar_from_g(1, x) == x
    assert dg.gbar_from_g(-1, dg.gbar_from_g(1, x)) == x
    assert dg.gbar_from_g_validated(0, x) == x
    assert dg.gbar_from_g_validated(1, x) == -x
    for k in (-1, 0, 1):
        assert dg.gbar_from_g_validated(k, x) == -dg.gbar_from_g(k, x)


def test_double_factorial():
    assert [dg.dfact(n) for n in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]
    with pytest.raises(ValueError):
        dg.dfact(-3)
