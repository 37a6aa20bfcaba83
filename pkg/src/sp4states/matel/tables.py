"""Closed-form matrix elements laid out like the extraction output.

For every valid target of ``op`` applied to |t, t, z; v> this module
evaluates the matching closed form and expresses it in the
character-state convention, so rows from here and from
:mod:`sp4states.matel.extract` compare one to one.  Degenerate values
are un-normalised with the N(t, z) constants.
"""

from __future__ import annotations

from fractions import Fraction

from ..basis import StateLabel, check_label, multiplets_at
from ..scalar import ZERO, canonicalize_root
from . import degenerate as dg
from .cg import vector_cg
from .extract import EXTRACTABLE, OrdinaryME
from .generic import formula_kind, ordinary_generic_formula


def _targets(a: int, b: int, src: StateLabel, op: str):
    z2t = src.z2 + EXTRACTABLE[op]
    m2 = src.t2 - 2
    for tp2 in (src.t2 + 2, src.t2, src.t2 - 2):
        if tp2 < abs(m2):
            continue
        for v in multiplets_at(a, b, tp2, z2t):
            yield StateLabel(a, b, tp2, z2t, v, m2)


def _degenerate_reduced(a: int, b: int, src: StateLabel, dst: StateLabel, op: str, printed: bool):
    t, z, tp, zp = src.t, src.z, dst.t, dst.z
    k = int(tp - t)
    if b == 0:
        def g(t_, z_, dt):
            return dg.rme_a0(a, t_, z_, dt)
        ns, nt = dg.norm_a0(a, t, z), dg.norm_a0(a, tp, zp)
    else:
        def g(t_, z_, dt):
            return -dg.rme_0b(b, t_, z_, dt, printed=True) if printed else dg.rme_0b_g(b, t_, z_, dt)
        ns, nt = dg.norm_0b(b, t, z), dg.norm_0b(b, tp, zp)
    if op == "G-1":
        r = g(t, z, k)
    else:
        conj = dg.gbar_from_g if printed else dg.gbar_from_g_validated
        r = conj(k, g(tp, zp, -k))
    return r * nt / ns


def formula_ordinary(a: int, b: int, t2: int, z2: int, v: int, op: str = "G-1",
                     *, printed: bool = False) -> list[OrdinaryME]:
    """Closed-form counterparts of :func:`~sp4states.matel.extract.extract_ordinary`."""
    src = StateLabel(a, b, t2, z2, v)
    check_label(src)
    if op not in EXTRACTABLE:
        raise KeyError(f"no closed forms for {op!r}; expected one of {sorted(EXTRACTABLE)}")
    degenerate = a == 0 or b == 0
    if not degenerate and op != "G-1":
        raise KeyError("generic closed forms exist for G-1 only")
    out = []
    for dst in _targets(a, b, src, op):
        if degenerate:
            cg = vector_cg(t2, t2, -1, dst.t2)
            r = _degenerate_reduced(a, b, src, dst, op, printed)
            value = cg * r * canonicalize_root(1, Fraction(1, dst.t2 + 1)) if cg else ZERO
        else:
            kind = formula_kind(a, t2, dst.t2)
            value = ordinary_generic_formula(kind, a, b, src.t, src.z, v, (dst.t2 - t2) // 2, dst.v - v,
                                             printed=printed)
        out.append(OrdinaryME(src, dst, op, value))
    return out
