"""Power-series expansion of the character generator and the branching generator.

Both generators are sums of terms  numerator / prod(1 - x)  and are
expanded by enumerating bounded exponent tuples, one family per term.
Weights are doubled integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .poly import Monomial, Var, _compositions, mono_mul, mono_weight2

WeightTable = dict  # (a, b, m2, z2) -> multiplicity


@dataclass(frozen=True)
class Family:
    """One term of the character generator: numerator times a geometric series."""

    numerator: Monomial
    free: tuple[Var, ...]


def _m(*vs: Var) -> Monomial:
    e = [0] * 9
    for v in vs:
        e[v] += 1
    return tuple(e)


_COMMON = (Var.BETA, Var.ETA, Var.ZETA)

# the five compatible families; their union is the set of character states
FAMILIES = (
    Family(_m(), _COMMON + (Var.XI, Var.ALPHA, Var.THETA)),
    Family(_m(Var.GAMMA), _COMMON + (Var.ALPHA, Var.THETA, Var.GAMMA)),
    Family(_m(Var.KAPPA), _COMMON + (Var.THETA, Var.GAMMA, Var.KAPPA)),
    Family(_m(Var.DELTA), _COMMON + (Var.GAMMA, Var.KAPPA, Var.DELTA)),
    Family(_m(Var.ALPHA, Var.DELTA), _COMMON + (Var.GAMMA, Var.DELTA, Var.ALPHA)),
)


def family_monomials(family: Family, a: int, b: int) -> Iterator[Monomial]:
    """Monomials of the family with A-degree ``a`` and B-degree ``b``."""
    na = sum(family.numerator[:4])
    nb = sum(family.numerator[4:])
    if a < na or b < nb:
        return
    fa = [v for v in family.free if v <= Var.DELTA]
    fb = [v for v in family.free if v > Var.DELTA]
    for ea in _compositions(a - na, len(fa)):
        for eb in _compositions(b - nb, len(fb)):
            e = [0] * 9
            for v, k in zip(fa, ea):
                e[v] += k
            for v, k in zip(fb, eb):
                e[v] += k
            yield mono_mul(family.numerator, tuple(e))


def expand_character(a_max: int, b_max: int) -> WeightTable:
    """Weight multiplicities ``C[(a, b, m2, z2)]`` for a <= a_max, b <= b_max."""
    table: Counter = Counter()
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            for fam in FAMILIES:
                for m in family_monomials(fam, a, b):
                    m2, z2 = mono_weight2(m)
                    table[(a, b, m2, z2)] += 1
    return dict(sorted(table.items()))


def weights(a: int, b: int) -> dict[tuple[int, int], int]:
    """``{(m2, z2): multiplicity}`` for the single irrep (a, b)."""
    table: Counter = Counter()
    for fam in FAMILIES:
        for m in family_monomials(fam, a, b):
            table[mono_weight2(m)] += 1
    return dict(sorted(table.items(), key=lambda kv: (-kv[0][0], -kv[0][1])))


def dim(a: int, b: int) -> int:
    return sum(weights(a, b).values())


def weyl_dim(a: int, b: int) -> int:
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


def expand_branching(a_max: int, b_max: int) -> dict[tuple[int, int, int, int], int]:
    """Subgroup multiplicities ``{(a, b, t2, z2): count}``.

    First term: free powers of A T^1/2 Z^1/2, A T^1/2 Z^-1/2, B Z, B/Z, B T.
    Second term: the same without B T, times A^(2s) with s >= 1.
    """
    table = {}
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            for (t2, z2), n in expand_branching_cell(a, b).items():
                table[(a, b, t2, z2)] = n
    return dict(sorted(table.items()))


def expand_branching_cell(a: int, b: int) -> dict[tuple[int, int], int]:
    """``{(t2, z2): count}`` for one irrep; x + y + 2s = a, u + v + w = b."""
    out: Counter = Counter()
    for s in range(a // 2 + 1):
        xy = a - 2 * s
        for x in range(xy + 1):
            y = xy - x
            for u in range(b + 1):
                for vv in range(b - u + 1):
                    w = b - u - vv
                    if s and w:
                        continue
                    out[(x + y + 2 * w, x - y + 2 * u - 2 * vv)] += 1
    return dict(sorted(out.items(), key=lambda kv: (-kv[0][0], -kv[0][1])))


def dimension_identities() -> dict[str, tuple[int, int]]:
    """Quadratic product dimension checks: (left side, right side)."""
    sym2 = lambda n: n * (n + 1) // 2
    return {
        "sym2(1,0) = (2,0)": (sym2(dim(1, 0)), dim(2, 0)),
        "sym2(0,1) = (0,2) + (0,0)": (sym2(dim(0, 1)), dim(0, 2) + dim(0, 0)),
        "(1,0)x(0,1) = (1,1) + (1,0)": (dim(1, 0) * dim(0, 1), dim(1, 1) + dim(1, 0)),
    }
