"""Direct matrix elements of the degenerate irreps from polynomial action.

States are normalised with the Bargmann pairing (after removing multiples
of the unwanted scalar for (0, b)); nothing here uses a closed form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..basis import StateLabel, highest_state, is_valid, lowered_state, unwanted_projection
from ..liealg import GBAR_VECTOR, G_VECTOR, apply
from ..poly import Poly, bargmann
from ..scalar import ZERO, RootSum, canonicalize_root
from .cg import vector_cg


def _label(a: int, b: int, t, z, m=None) -> StateLabel:
    t2, z2 = int(2 * Fraction(t)), int(2 * Fraction(z))
    m2 = t2 if m is None else int(2 * Fraction(m))
    if a == 0:
        v = (b * 2 - t2 - z2) // 4
    else:
        v = 0
    return StateLabel(a, b, t2, z2, v, m2)


@lru_cache(maxsize=None)
def wanted_state(a: int, b: int, t2: int, z2: int, m2: int) -> tuple[Poly, Fraction]:
    """(wanted polynomial, its squared norm) for a degenerate irrep state."""
    lab = _label(a, b, Fraction(t2, 2), Fraction(z2, 2), Fraction(m2, 2))
    pre, p = lowered_state(lab)
    p = p.scale(pre)
    if a == 0 and b >= 2:
        p = unwanted_projection(p, b)
    n2 = bargmann(p, p)
    if not n2.is_rational():
        raise ArithmeticError(f"irrational squared norm {n2}")
    return p, n2.to_fraction()


def direct_norm(a: int, b: int, t, z) -> RootSum:
    """1/||wanted part|| of the unnormalised highest character state."""
    t2, z2 = int(2 * Fraction(t)), int(2 * Fraction(z))
    lab = _label(a, b, Fraction(t2, 2), Fraction(z2, 2))
    p = highest_state(lab)
    if a == 0 and b >= 2:
        p = unwanted_projection(p, b)
    return canonicalize_root(1, 1 / bargmann(p, p).to_fraction())


def direct_me(a: int, b: int, op, src: tuple, dst: tuple) -> RootSum:
    """<dst| op |src> on normalised states; src, dst are doubled (t, m, z)."""
    ps, ns = wanted_state(a, b, src[0], src[2], src[1])
    pd, nd = wanted_state(a, b, dst[0], dst[2], dst[1])
    raw = bargmann(pd, apply(op, ps))
    return raw * canonicalize_root(1, 1 / (ns * nd))


def direct_rme(a: int, b: int, vector: str, t, z, dt: int, q: int = -1) -> RootSum:
    """Reduced element <t+dt, z+dz || X || t, z> from component ``q`` on m = t."""
    ops = G_VECTOR if vector == "G" else GBAR_VECTOR
    dz2 = 2 if vector == "G" else -2
    t2, z2 = int(2 * Fraction(t)), int(2 * Fraction(z))
    tp2 = t2 + 2 * dt
    src = _label(a, b, Fraction(t2, 2), Fraction(z2, 2))
    dst = _label(a, b, Fraction(tp2, 2), Fraction(z2 + dz2, 2), Fraction(t2 + 2 * q, 2))
    if not is_valid(src) or tp2 < 0 or abs(dst.m2) > tp2 or not is_valid(dst):
        return ZERO
    cg = vector_cg(t2, t2, q, tp2)
    if not cg:
        return ZERO
    me = direct_me(a, b, ops[q], (t2, t2, z2), (tp2, t2 + 2 * q, z2 + dz2))
    return me * canonicalize_root(1, tp2 + 1) / cg
