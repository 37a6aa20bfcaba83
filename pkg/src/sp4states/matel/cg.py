"""Exact SU(2) Clebsch-Gordan coefficients by ladder recursion.

Coupled states |J M> are built in the product basis starting from the
stretched state, lowering with J- = j1- + j2-, and orthogonalising the top
state of each smaller J against the larger ones.  Condon-Shortley phase:
<j1 j1; j2 J-j1 | J J> > 0.  All angular momenta are doubled integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..scalar import ONE, ZERO, RootSum, canonicalize_root

State = dict  # (m1_2, m2_2) -> RootSum


def _lower_factor(j2: int, m2: int) -> RootSum:
    # sqrt((j+m)(j-m+1)) in doubled units
    return canonicalize_root(1, Fraction((j2 + m2) * (j2 - m2 + 2), 4))


def _lower(state: State, j1: int, j2: int) -> State:
    out: dict = {}
    for (m1, m2), c in state.items():
        if m1 > -j1:
            k = (m1 - 2, m2)
            out[k] = out.get(k, ZERO) + c * _lower_factor(j1, m1)
        if m2 > -j2:
            k = (m1, m2 - 2)
            out[k] = out.get(k, ZERO) + c * _lower_factor(j2, m2)
    return {k: c for k, c in out.items() if c}


def _dot(x: State, y: State) -> RootSum:
    return sum((c * y[k] for k, c in x.items() if k in y), ZERO)


@lru_cache(maxsize=None)
def coupled_states(j1: int, j2: int) -> dict:
    """``{(J, M): {(m1, m2): coefficient}}`` for j1 x j2, doubled units."""
    table: dict = {}
    for J in range(j1 + j2, abs(j1 - j2) - 1, -2):
        seed = {(j1, J - j1): ONE}
        top = dict(seed)
        for Jp in range(j1 + j2, J, -2):
            higher = table[(Jp, J)]
            overlap = _dot(higher, seed)
            for k, c in higher.items():
                top[k] = top.get(k, ZERO) - overlap * c
        top = {k: c for k, c in top.items() if c}
        norm2 = _dot(top, top)
        if not norm2.is_rational():
            raise ArithmeticError("non-rational norm in CG recursion")
        inv = canonicalize_root(1, 1 / norm2.to_fraction())
        top = {k: c * inv for k, c in top.items()}
        if top[(j1, J - j1)].sign() < 0:
            top = {k: -c for k, c in top.items()}
        table[(J, J)] = top
        cur = top
        for M in range(J, -J, -2):
            cur = _lower(cur, j1, j2)
            inv = _lower_factor(J, M).invert()
            cur = {k: c * inv for k, c in cur.items()}
            table[(J, M - 2)] = cur
    return table


def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, J: int, M: int) -> RootSum:
    """<j1 m1; j2 m2 | J M> with all arguments doubled."""
    if m1 + m2 != M or abs(m1) > j1 or abs(m2) > j2 or abs(M) > J:
        return ZERO
    if (j1 + j2 + J) % 2 or not abs(j1 - j2) <= J <= j1 + j2:
        return ZERO
    return coupled_states(j1, j2)[(J, M)].get((m1, m2), ZERO)


def vector_cg(t2: int, m2: int, q: int, tp2: int) -> RootSum:
    """<t m; 1 q | t' m+q> for a vector operator component ``q`` (not doubled)."""
    return clebsch_gordan(t2, m2, 2, 2 * q, tp2, m2 + 2 * q)
