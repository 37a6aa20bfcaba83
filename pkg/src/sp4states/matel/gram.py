"""Wanted parts and Gram matrices for generic irreps.

The incompatible-pair relations span an ideal whose bidegree-(a, b) part
is the Bargmann complement of the irrep (a, b) inside the polynomials of
that bidegree.  Projecting a character state orthogonally to it gives the
state's wanted part; the rewrite map changes a polynomial only by ideal
elements, so wanted parts carry the same expansion coefficients as the
character states do.
"""

from __future__ import annotations

from functools import lru_cache

from ..basis import StateLabel, highest_state, multiplets_at
from ..linalg import row_reduce, solve
from ..poly import RULES, Poly, bargmann, grlex_key, mono_mul, mono_weight2, monomials_of_degree, unit, weight_of
from ..scalar import ONE, RootSum


def _relation(rule) -> Poly:
    (i, j), rhs = rule
    return Poly.monomial(mono_mul(unit(i), unit(j)), ONE) - Poly(dict(rhs))


RELATIONS = tuple(_relation(r) for r in RULES)
_A_COUNT = 4  # variables 0..3 belong to the four-dimensional fundamental


def _bidegree(rule) -> tuple[int, int]:
    (i, j), _ = rule
    na = (i < _A_COUNT) + (j < _A_COUNT)
    return na, 2 - na


@lru_cache(maxsize=None)
def ideal_basis(a: int, b: int, weight2: tuple[int, int]) -> tuple[Poly, ...]:
    """Independent spanning set of the relation ideal at bidegree (a, b) and one weight."""
    gens = []
    for rule, rel in zip(RULES, RELATIONS):
        da, db = _bidegree(rule)
        if a < da or b < db:
            continue
        rw = weight_of(rel)
        need = (weight2[0] - rw[0], weight2[1] - rw[1])
        for m in monomials_of_degree(a - da, b - db):
            if mono_weight2(m) == need:
                gens.append(rel * Poly.monomial(m))
    if not gens:
        return ()
    monos = sorted({m for g in gens for m in g.terms}, key=grlex_key, reverse=True)
    rows, _ = row_reduce([[g.coefficient(m) for m in monos] for g in gens], len(monos))
    return tuple(Poly({m: c for m, c in zip(monos, row) if c}) for row in rows)


def wanted_part(p: Poly, a: int, b: int) -> Poly:
    """Bargmann projection of a weight-homogeneous ``p`` orthogonal to the relation ideal."""
    if not p:
        return p
    span = ideal_basis(a, b, weight_of(p))
    if not span:
        return p
    gram = [[bargmann(x, y) for y in span] for x in span]
    coeffs = solve(gram, [bargmann(x, p) for x in span])
    out = p
    for c, x in zip(coeffs, span):
        out = out - x.scale(c)
    return out


@lru_cache(maxsize=None)
def gram_block(a: int, b: int, t2: int, z2: int) -> tuple[tuple[int, ...], tuple[tuple[RootSum, ...], ...]]:
    """(v values, Gram matrix of the wanted highest states) for one multiplet block."""
    vs = tuple(multiplets_at(a, b, t2, z2))
    parts = [wanted_part(highest_state(StateLabel(a, b, t2, z2, v)), a, b) for v in vs]
    return vs, tuple(tuple(bargmann(x, y) for y in parts) for x in parts)
