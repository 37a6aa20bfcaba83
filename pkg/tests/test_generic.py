import random
from fractions import Fraction as F

import pytest

from sp4states.basis import Kind, branch_labels
from sp4states.matel.extract import extract_ordinary, to_reduced
from sp4states.matel.generic import (
    LONG_CUBIC_TERMS, ORDINARY, REDUCED, SIGN_ERRATA, formula_kind, long_cubic,
    ordinary_generic_formula, reduced_generic_formula,
)
from sp4states.matel.verify import CUBIC_EXPONENTS, fit_long_cubic
from sp4states.scalar import ZERO, canonicalize_root

GENERIC = [(a, b) for a in range(1, 5) for b in range(1, 5) if a + b <= 5]


def _elements(a, b):
    for lab in branch_labels(a, b):
        for me in extract_ordinary(a, b, lab.t2, lab.z2, lab.v):
            kind = formula_kind(a, lab.t2, me.target.t2)
            yield lab, me, (kind, a, b, lab.t, lab.z, lab.v, me.dt2 // 2, me.dv)


def test_table_examples():
    for kind in (Kind.TYPE_I, Kind.TYPE_II):
        assert ordinary_generic_formula(kind, 2, 2, 1, 0, 0, 1, -1) == ZERO
    # a/2 - t + v = 0
    assert ordinary_generic_formula(Kind.TYPE_II, 4, 1, 2, F(1), 0, 1, 0) == ZERO
    assert reduced_generic_formula(Kind.TYPE_I, 1, 2, 1, 0, 2, 1, -1) == 2 * canonicalize_root(1, 5)
    assert reduced_generic_formula(Kind.TYPE_I, 1, 2, 1, 0, 0, 1, -1) == ZERO
    assert ordinary_generic_formula(Kind.TYPE_I, 1, 1, 1, 0, 0, 1, 1) == ZERO


def test_long_cubic_terms_match_the_function():
    assert len(LONG_CUBIC_TERMS) == 39
    rng = random.Random(7)
    for _ in range(50):
        p = [F(rng.randint(-9, 9), rng.choice([1, 2])) for _ in range(5)]
        total = F(0)
        for c, e in LONG_CUBIC_TERMS:
            term = F(c)
            for x, k in zip(p, e):
                term *= x ** k
            total += term
        assert total == long_cubic(*p)


def test_long_cubic_fit_is_unique_and_equals_the_printed_terms():
    rank, fitted = fit_long_cubic(5)
    assert rank == len(CUBIC_EXPONENTS) == 56
    printed = {e: c for c, e in LONG_CUBIC_TERMS}
    assert {e: x.to_fraction() for e, x in fitted.items() if x} == printed


@pytest.mark.parametrize("a, b", GENERIC)
def test_validated_tables_match_extraction(a, b):
    for lab, me, args in _elements(a, b):
        assert ordinary_generic_formula(*args) == me.value, (lab, me.target)
        assert reduced_generic_formula(*args) == to_reduced(me).value, (lab, me.target)


@pytest.mark.parametrize("a, b", GENERIC)
def test_printed_tables_differ_only_by_the_recorded_signs(a, b):
    for lab, me, args in _elements(a, b):
        printed = ordinary_generic_formula(*args, printed=True)
        if args[0:1] + args[6:] in SIGN_ERRATA:
            assert printed == -me.value
        else:
            assert printed == me.value


def test_sign_errata_are_observed():
    seen = set()
    for a, b in GENERIC:
        for lab, me, args in _elements(a, b):
            if me.value and ordinary_generic_formula(*args, printed=True) != me.value:
                seen.add(args[0:1] + args[6:])
    assert seen == set(SIGN_ERRATA)


def test_reduced_from_ordinary_for_random_labels():
    rng = random.Random(3)
    pool = [x for a, b in GENERIC for x in _elements(a, b)]
    for lab, me, args in rng.sample(pool, 20):
        cg = to_reduced(me)
        assert reduced_generic_formula(*args) == cg.value


def test_tables_cover_the_same_keys():
    assert set(ORDINARY) == set(REDUCED)
    assert len(ORDINARY) == 12


def test_formula_kind():
    assert formula_kind(2, 4, 2) is Kind.TYPE_I
    assert formula_kind(2, 0, 2) is Kind.TYPE_II
    assert formula_kind(2, 2, 2) is Kind.TYPE_I
