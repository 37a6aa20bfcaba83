"""Matrix elements recomputed from explicit polynomial action.

``extract_ordinary`` follows the climbing procedure: act with the
generator on a highest state, raise twice with T+ to isolate the t+1
components, subtract them, raise once to isolate the t components,
subtract, and read the t-1 components off what remains.
``extract_direct`` solves one linear system in the full lowered basis
instead; the two are independent routes to the same numbers.

Every polynomial handed to a solve has coefficients in Q(sqrt 2); the
radical normalisations of lowered states are carried separately as
single-term prefactors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..basis import (
    StateLabel,
    check_label,
    highest_state,
    ladder_norm_squared,
    lowered_state,
    multiplets_at,
)
from ..errors import NotInSpan
from ..liealg import T_PLUS, apply, generator, power
from ..poly import Poly, express_in_basis, reduce
from ..scalar import ZERO, RootSum, canonicalize_root
from .cg import vector_cg

SUBRING = (1, 2)

# z shift (doubled) of the q = -1 components that can be extracted
EXTRACTABLE = {"G-1": 2, "Gb-1": -2}


@dataclass(frozen=True)
class OrdinaryME:
    source: StateLabel
    target: StateLabel
    op: str
    value: RootSum

    @property
    def dt2(self) -> int:
        return self.target.t2 - self.source.t2

    @property
    def dv(self) -> int:
        return self.target.v - self.source.v


@dataclass(frozen=True)
class ReducedME:
    source: StateLabel
    target: StateLabel
    op: str
    value: RootSum


def raise_factor(t2: int, m2: int, steps: int) -> RootSum:
    """mu with T+^steps |t, m> = mu |t, m+steps> (standard ladder)."""
    out = canonicalize_root(1, 1)
    for _ in range(steps):
        out = out * canonicalize_root(1, Fraction((t2 - m2) * (t2 + m2 + 2), 4))
        m2 += 2
    return out


def _check_subring(x: RootSum, where: str) -> None:
    if not set(x.radicands()) <= set(SUBRING):
        raise AssertionError(f"{where}: {x} left the sqrt(2) subring")


def _highest_basis(a: int, b: int, t2: int, z2: int):
    vs = multiplets_at(a, b, t2, z2)
    labels = [StateLabel(a, b, t2, z2, v) for v in vs]
    return labels, [highest_state(lab) for lab in labels]


def _peel(P: Poly, a: int, b: int, src: StateLabel, tp2: int, z2t: int, out: list, op: str) -> Poly:
    """Isolate and subtract the t' = tp2 components of P (weight m = t-1)."""
    m2 = src.t2 - 2
    steps = (tp2 - m2) // 2
    raised = reduce(power(T_PLUS, P, steps))
    labels, basis = _highest_basis(a, b, tp2, z2t)
    if not labels:
        if raised:
            raise NotInSpan(f"unexpected t={Fraction(tp2, 2)} component in {op}{src}")
        return P
    r = express_in_basis(raised, basis, allowed_radicands=SUBRING)
    mu_inv = raise_factor(tp2, m2, steps).invert()
    for lab, ri in zip(labels, r):
        target = lab.with_m(m2)
        value = ri * mu_inv
        out.append(OrdinaryME(src, target, op, value))
        if value:
            pre, q = lowered_state(target)
            k = value * pre
            _check_subring(k, "subtraction factor")
            P = P - q.scale(k)
    return P


@lru_cache(maxsize=None)
def _extract(a: int, b: int, t2: int, z2: int, v: int, op: str) -> tuple:
    src = StateLabel(a, b, t2, z2, v)
    check_label(src)
    dz2 = EXTRACTABLE[op]
    z2t = z2 + dz2
    P = reduce(apply(generator(op), highest_state(src)))
    out: list[OrdinaryME] = []
    m2 = t2 - 2
    for tp2 in (t2 + 2, t2, t2 - 2):
        if tp2 < abs(m2):
            continue
        P = _peel(P, a, b, src, tp2, z2t, out, op)
    if P:
        raise NotInSpan(f"{op}{src}: remainder {P} outside the t-1, t, t+1 span")
    return tuple(out)


def extract_ordinary(a: int, b: int, t2: int, z2: int, v: int, op: str = "G-1") -> list[OrdinaryME]:
    """Coefficients of every (t', t-1, z+-1, v') state in ``op`` applied to |t, t, z; v>."""
    return list(_extract(a, b, t2, z2, v, op))


def extract_direct(a: int, b: int, t2: int, z2: int, v: int, op: str = "G-1") -> list[OrdinaryME]:
    """Same numbers from one solve over all lowered states of the target weight."""
    src = StateLabel(a, b, t2, z2, v)
    check_label(src)
    z2t = z2 + EXTRACTABLE[op]
    m2 = t2 - 2
    P = reduce(apply(generator(op), highest_state(src)))
    labels = []
    for tp2 in range(a + 2 * b, abs(m2) - 1, -2):
        for vp in multiplets_at(a, b, tp2, z2t):
            labels.append(StateLabel(a, b, tp2, z2t, vp, m2))
    if not labels:
        if P:
            raise NotInSpan(f"{op}{src} has no target states but acts nontrivially")
        return []
    basis = [lowered_state(lab)[1] for lab in labels]
    x = express_in_basis(P, basis, allowed_radicands=SUBRING)
    return [
        OrdinaryME(src, lab, op, xi * canonicalize_root(1, ladder_norm_squared(lab.t2, lab.m2)))
        for lab, xi in zip(labels, x)
    ]


def to_reduced(me: OrdinaryME) -> ReducedME:
    """Strip the Clebsch-Gordan factor: value * sqrt(2t'+1) / <t t; 1 -1 | t' t-1>."""
    cg = vector_cg(me.source.t2, me.source.m2, -1, me.target.t2)
    if not cg:
        value = ZERO
    else:
        value = me.value * canonicalize_root(1, me.target.t2 + 1) / cg
    return ReducedME(me.source, me.target.highest(), me.op[:-2] if me.op.endswith("-1") else me.op, value)


def extract_reduced(a: int, b: int, t2: int, z2: int, v: int, op: str = "G-1") -> list[ReducedME]:
    return [to_reduced(me) for me in extract_ordinary(a, b, t2, z2, v, op)]
