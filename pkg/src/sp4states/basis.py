"""Branching enumeration and explicit character-state polynomials.

A subgroup multiplet inside the Sp(4) irrep (a, b) is labelled by
(t, z; v).  Highest states come in two parametrizations: type I for
t >= a/2 (a power of xi, no alpha*delta - beta*gamma factor) and type II
for t <= a/2; at t = a/2 they coincide ("ambiguous").
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from .errors import InvalidLabel
from .linalg import solve
from .liealg import T_MINUS, apply
from .poly import Poly, Var, bargmann, monomials_of_degree, mono_weight2, reduce
from .scalar import RootSum, canonicalize_root


class Kind(str, enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    AMBIGUOUS = "ambiguous"


def half(n2: int) -> str:
    """Render a doubled integer as a fraction string: 3 -> '3/2'."""
    return str(Fraction(n2, 2))


def doubled(x) -> int:
    """Parse '3/2', 1.5-free ints or Fractions into doubled-integer units."""
    q = Fraction(x) * 2
    if q.denominator != 1:
        raise InvalidLabel(f"{x} is not a half-integer")
    return int(q)


@dataclass(frozen=True, order=True)
class StateLabel:
    a: int
    b: int
    t2: int
    z2: int
    v: int
    m2: int | None = None  # None means m = t

    def __post_init__(self):
        if self.m2 is None:
            object.__setattr__(self, "m2", self.t2)

    @classmethod
    def make(cls, a, b, t, z, v, m=None) -> "StateLabel":
        t2, z2 = doubled(t), doubled(z)
        return cls(a, b, t2, z2, v, t2 if m is None else doubled(m))

    @property
    def t(self) -> Fraction:
        return Fraction(self.t2, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.m2, 2)

    @property
    def z(self) -> Fraction:
        return Fraction(self.z2, 2)

    @property
    def kind(self) -> Kind:
        if self.t2 > self.a:
            return Kind.TYPE_I
        if self.t2 < self.a:
            return Kind.TYPE_II
        return Kind.AMBIGUOUS

    def highest(self) -> "StateLabel":
        return replace(self, m2=self.t2)

    def with_m(self, m2: int) -> "StateLabel":
        return replace(self, m2=m2)

    def multiplet(self) -> tuple[int, int, int]:
        return (self.t2, self.z2, self.v)

    def __str__(self) -> str:
        s = f"(a={self.a},b={self.b}; t={half(self.t2)}, m={half(self.m2)}, z={half(self.z2)}; v={self.v})"
        return s

    def to_json(self) -> dict:
        return {
            "t": half(self.t2), "m": half(self.m2), "z": half(self.z2),
            "v": self.v, "kind": self.kind.value,
        }


def _exponents(a: int, b: int, t2: int, z2: int, v: int, kind: Kind) -> dict | None:
    """Exponents of the highest-state formula, or None if any is invalid."""
    if (t2 + z2) % 2 or (t2 - a) % 2 or v < 0:
        return None
    tz = (t2 + z2) // 2
    if kind is Kind.TYPE_II:
        ex = {
            "alpha": tz - b + 2 * v,
            "beta": b + (t2 - z2) // 2 - 2 * v,
            "s": (a - t2) // 2,
            "eta": b - v,
            "zeta": v,
            "xi": 0,
        }
    else:
        ex = {
            "alpha": tz - b + 2 * v,
            "beta": a + b - tz - 2 * v,
            "s": 0,
            "eta": (a - t2) // 2 + b - v,
            "zeta": v,
            "xi": (t2 - a) // 2,
        }
    if min(ex.values()) < 0:
        return None
    return ex


def _formula_kind(a: int, t2: int) -> Kind:
    # ambiguous states use the type-I formula; both agree there
    return Kind.TYPE_II if t2 < a else Kind.TYPE_I


def is_valid(label: StateLabel) -> bool:
    if label.a < 0 or label.b < 0 or label.t2 < 0:
        return False
    if abs(label.m2) > label.t2 or (label.t2 - label.m2) % 2:
        return False
    return _exponents(label.a, label.b, label.t2, label.z2, label.v,
                      _formula_kind(label.a, label.t2)) is not None


def check_label(label: StateLabel) -> None:
    if not is_valid(label):
        raise InvalidLabel(f"{label} is not a state of ({label.a},{label.b})")


BranchTable = dict  # (t2, z2) -> list[int] of v values


@lru_cache(maxsize=None)
def _branch(a: int, b: int) -> tuple:
    rows = []
    top = a + 2 * b
    for t2 in range(top, -1, -1):
        for z2 in range(top, -top - 1, -1):
            vs = [
                v for v in range(b + 1)
                if _exponents(a, b, t2, z2, v, _formula_kind(a, t2)) is not None
            ]
            if vs:
                rows.append(((t2, z2), tuple(vs)))
    return tuple(rows)


def branch(a: int, b: int) -> BranchTable:
    """Subgroup content of (a, b): ``{(t2, z2): [v, ...]}``.

    Keys are ordered by t2 descending then z2 descending; v ascending.
    """
    if a < 0 or b < 0:
        raise InvalidLabel("negative irrep label")
    return {k: list(vs) for k, vs in _branch(a, b)}


def branch_labels(a: int, b: int) -> list[StateLabel]:
    """Highest-state labels of every subgroup multiplet of (a, b)."""
    return [StateLabel(a, b, t2, z2, v) for (t2, z2), vs in _branch(a, b) for v in vs]


def branch_dim(a: int, b: int) -> int:
    return sum((t2 + 1) * len(vs) for (t2, _), vs in _branch(a, b))


def multiplets_at(a: int, b: int, t2: int, z2: int) -> list[int]:
    return list(dict(_branch(a, b)).get((t2, z2), ()))


def _var(v: Var, e: int) -> Poly:
    m = [0] * 9
    m[v] = e
    return Poly.monomial(tuple(m))


@lru_cache(maxsize=None)
def _pair_power(s: int) -> Poly:
    """(alpha*delta - beta*gamma)**s expanded by the binomial theorem."""
    terms = {}
    for k in range(s + 1):
        c = factorial(s) // (factorial(k) * factorial(s - k)) * (-1) ** (s - k)
        terms[(k, s - k, s - k, k, 0, 0, 0, 0, 0)] = c
    return Poly(terms)


@lru_cache(maxsize=None)
def _highest(a: int, b: int, t2: int, z2: int, v: int) -> Poly:
    kind = _formula_kind(a, t2)
    ex = _exponents(a, b, t2, z2, v, kind)
    if ex is None:
        raise InvalidLabel(f"no state (a={a},b={b}; t={half(t2)}, z={half(z2)}; v={v})")
    m = (ex["alpha"], ex["beta"], 0, 0, ex["eta"], ex["xi"], ex["zeta"], 0, 0)
    p = Poly.monomial(m)
    if ex["s"]:
        p = p * _pair_power(ex["s"])
    return p


def highest_state(label: StateLabel) -> Poly:
    """Unnormalized highest state |t, t, z; v> (already reduced)."""
    if label.m2 != label.t2:
        raise InvalidLabel("highest_state needs m = t")
    return _highest(label.a, label.b, label.t2, label.z2, label.v)


def ladder_norm_squared(t2: int, m2: int) -> Fraction:
    """lambda**2 with T-^(t-m)|t,t> = lambda |t,m> under the standard ladder."""
    k = (t2 - m2) // 2
    return Fraction(factorial(k) * factorial(t2), factorial((t2 + m2) // 2))


@lru_cache(maxsize=None)
def _lowered(a: int, b: int, t2: int, z2: int, v: int, m2: int) -> Poly:
    if m2 == t2:
        return _highest(a, b, t2, z2, v)
    return reduce(apply(T_MINUS, _lowered(a, b, t2, z2, v, m2 + 2)))


def lowered_state(label: StateLabel) -> tuple[RootSum, Poly]:
    """``(1/lambda, T-^(t-m) highest)``; the state is their product.

    Keeping the radical prefactor separate leaves the polynomial with
    coefficients in Q(sqrt 2).
    """
    check_label(label)
    pre = canonicalize_root(1, 1 / ladder_norm_squared(label.t2, label.m2))
    return pre, _lowered(label.a, label.b, label.t2, label.z2, label.v, label.m2)


def state(label: StateLabel) -> Poly:
    pre, p = lowered_state(label)
    return p.scale(pre)


def involution_label(label: StateLabel) -> StateLabel:
    """Label of the state obtained by the alpha<->delta, ... substitution."""
    if label.t2 >= label.a:
        v = (label.a - label.t2) // 2 + label.b - label.v
    else:
        v = label.b - label.v
    return StateLabel(label.a, label.b, label.t2, -label.z2, v, -label.m2)


# ---------------------------------------------------------------------------
# (0, b): removing multiples of the unwanted scalar
# ---------------------------------------------------------------------------

UNWANTED_SCALAR = Poly({
    (0, 0, 0, 0, 1, 0, 1, 0, 0): 1,
    (0, 0, 0, 0, 0, 1, 0, 1, 0): -1,
    (0, 0, 0, 0, 0, 0, 0, 0, 2): Fraction(1, 2),
})


def _unwanted_span(b: int, weight2: tuple[int, int]) -> list[Poly]:
    if b < 2:
        return []
    out = []
    for m in monomials_of_degree(0, b - 2):
        if mono_weight2(m) == weight2:
            out.append(UNWANTED_SCALAR * Poly.monomial(m))
    return out


def unwanted_projection(p: Poly, b: int) -> Poly:
    """Component of ``p`` Bargmann-orthogonal to every multiple of the unwanted scalar.

    The multiples of degree b are S * (degree b-2), which already contains
    the S**2 * (degree b-4) layer, so one Gram solve suffices.
    """
    if not p.terms:
        return p
    w = mono_weight2(next(iter(p.terms)))
    span = _unwanted_span(b, w)
    if not span:
        return p
    gram = [[bargmann(x, y) for y in span] for x in span]
    rhs = [bargmann(x, p) for x in span]
    coeffs = solve(gram, rhs)
    out = p
    for c, x in zip(coeffs, span):
        out = out - x.scale(c)
    return out


def iter_states(a: int, b: int) -> Iterator[StateLabel]:
    """Every (t, m, z; v) state of (a, b)."""
    for lab in branch_labels(a, b):
        for m2 in range(lab.t2, -lab.t2 - 1, -2):
            yield lab.with_m(m2)
