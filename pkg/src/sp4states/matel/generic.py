"""Closed forms for G-1 matrix elements between generic character states.

Ordinary elements ``(t+dt, t-1, z+1, v+dv | G-1 | t, t, z, v)`` are
coefficients in the non-orthonormal basis; reduced elements follow from
them by the Wigner-Eckart theorem.  Each formula is stored as a rational
polynomial part times the square root of a rational function of t, so a
value is ``rational(a, b, t, z, v) * sqrt(radicand(t))``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple

from ..basis import Kind
from ..scalar import ZERO, RootSum, canonicalize_root

F = Fraction


class Formula(NamedTuple):
    rational: Callable
    radicand: Callable


def long_cubic(a, b, t, v, z):
    """The degree-3 numerator of the type-I (t-1, v) element, term by term."""
    return (
        -a - b + a * b + b * b + t
        - 2 * a * t - 2 * b * t + 2 * a * b * t + 2 * b * b * t + 3 * t * t + 2 * t ** 3
        + 2 * v - 3 * a * v - 4 * b * v + 2 * a * b * v + 2 * b * b * v + 4 * t * v
        - 6 * a * t * v - 12 * b * t * v + 6 * t * t * v + 4 * v * v - 4 * a * v * v
        - 8 * b * v * v + 16 * t * v * v + 8 * v ** 3 + z - a * z - 2 * b * z
        + 2 * t * z - 2 * a * t * z - 4 * b * t * z + 4 * v * z - 2 * a * v * z
        - 4 * b * v * z + 12 * t * v * z + 8 * v * v * z + z * z
        + 2 * t * z * z + 2 * v * z * z
    )


# (monomial coefficient, exponents of (a, b, t, v, z)) for the printed cubic
LONG_CUBIC_TERMS = (
    (-1, (1, 0, 0, 0, 0)), (-1, (0, 1, 0, 0, 0)), (1, (1, 1, 0, 0, 0)), (1, (0, 2, 0, 0, 0)),
    (1, (0, 0, 1, 0, 0)), (-2, (1, 0, 1, 0, 0)), (-2, (0, 1, 1, 0, 0)), (2, (1, 1, 1, 0, 0)),
    (2, (0, 2, 1, 0, 0)), (3, (0, 0, 2, 0, 0)), (2, (0, 0, 3, 0, 0)), (2, (0, 0, 0, 1, 0)),
    (-3, (1, 0, 0, 1, 0)), (-4, (0, 1, 0, 1, 0)), (2, (1, 1, 0, 1, 0)), (2, (0, 2, 0, 1, 0)),
    (4, (0, 0, 1, 1, 0)), (-6, (1, 0, 1, 1, 0)), (-12, (0, 1, 1, 1, 0)), (6, (0, 0, 2, 1, 0)),
    (4, (0, 0, 0, 2, 0)), (-4, (1, 0, 0, 2, 0)), (-8, (0, 1, 0, 2, 0)), (16, (0, 0, 1, 2, 0)),
    (8, (0, 0, 0, 3, 0)), (1, (0, 0, 0, 0, 1)), (-1, (1, 0, 0, 0, 1)), (-2, (0, 1, 0, 0, 1)),
    (2, (0, 0, 1, 0, 1)), (-2, (1, 0, 1, 0, 1)), (-4, (0, 1, 1, 0, 1)), (4, (0, 0, 0, 1, 1)),
    (-2, (1, 0, 0, 1, 1)), (-4, (0, 1, 0, 1, 1)), (12, (0, 0, 1, 1, 1)), (8, (0, 0, 0, 2, 1)),
    (1, (0, 0, 0, 0, 2)), (2, (0, 0, 1, 0, 2)), (2, (0, 0, 0, 1, 2)),
)


def _one(t):
    return F(1)


# Ordinary elements, keyed by (formula kind, dt, dv).
ORDINARY: dict[tuple[Kind, int, int], Formula] = {
    (Kind.TYPE_I, 1, -1): Formula(lambda a, b, t, z, v: v, lambda t: 1 / ((1 + 2 * t) * (1 + t))),
    (Kind.TYPE_I, 0, -1): Formula(
        lambda a, b, t, z, v: v * (-b + t + 2 * v + z) / (1 + t), lambda t: 1 / (2 * t)),
    (Kind.TYPE_I, 0, 0): Formula(
        lambda a, b, t, z, v: (1 + t + v) * (-a - b + t + 2 * v + z) / (1 + t), lambda t: 1 / (2 * t)),
    (Kind.TYPE_I, -1, -1): Formula(
        lambda a, b, t, z, v: v * (-b + t + 2 * v + z) * (-1 - b + t + 2 * v + z) / (2 * t * (1 + 2 * t)),
        _one),
    (Kind.TYPE_I, -1, 0): Formula(
        lambda a, b, t, z, v: long_cubic(a, b, t, v, z) / (2 * t * (1 + 2 * t)), _one),
    (Kind.TYPE_I, -1, 1): Formula(
        lambda a, b, t, z, v: ((1 + 2 * t + v) * (-a - b + t + 2 * v + z)
                               * (1 - a - b + t + 2 * v + z) / (2 * t * (1 + 2 * t))),
        _one),
    (Kind.TYPE_II, 1, -1): Formula(lambda a, b, t, z, v: v, lambda t: 1 / ((1 + 2 * t) * (1 + t))),
    (Kind.TYPE_II, 1, 0): Formula(
        lambda a, b, t, z, v: F(a, 2) - t + v, lambda t: 1 / ((1 + 2 * t) * (1 + t))),
    (Kind.TYPE_II, 0, -1): Formula(
        lambda a, b, t, z, v: v * (-b + t + 2 * v + z) / (1 + t), lambda t: 1 / (2 * t)),
    (Kind.TYPE_II, 0, 0): Formula(
        lambda a, b, t, z, v: (1 + F(a, 2) + v) * (-b - t + 2 * v + z) / (1 + t), lambda t: 1 / (2 * t)),
    (Kind.TYPE_II, -1, -1): Formula(
        lambda a, b, t, z, v: v * (b - t - 2 * v - z) * (-1 - b + t + 2 * v + z) / (2 * t * (1 + 2 * t)),
        _one),
    (Kind.TYPE_II, -1, 0): Formula(
        lambda a, b, t, z, v: ((1 + F(a, 2) + t + v) * (-1 + b + t - 2 * v - z)
                               * (-b - t + 2 * v + z) / (2 * t * (1 + 2 * t))),
        _one),
}

# Reduced elements (t+dt, z+1, v+dv || G || t, z, v).
REDUCED: dict[tuple[Kind, int, int], Formula] = {
    (Kind.TYPE_I, 1, -1): Formula(lambda a, b, t, z, v: v, lambda t: 3 + 2 * t),
    (Kind.TYPE_I, 0, -1): Formula(
        lambda a, b, t, z, v: v * (-b + t + 2 * v + z), lambda t: (1 + 2 * t) / (2 * t * (1 + t))),
    (Kind.TYPE_I, 0, 0): Formula(
        lambda a, b, t, z, v: (-a - b + t + 2 * v + z) * (1 + t + v),
        lambda t: (1 + 2 * t) / (2 * t * (1 + t))),
    (Kind.TYPE_I, -1, -1): Formula(
        lambda a, b, t, z, v: v * (-1 - b + t + 2 * v + z) * (-b + t + 2 * v + z) / (2 * t),
        lambda t: 1 / (1 + 2 * t)),
    (Kind.TYPE_I, -1, 0): Formula(
        lambda a, b, t, z, v: long_cubic(a, b, t, v, z) / (2 * t), lambda t: 1 / (1 + 2 * t)),
    (Kind.TYPE_I, -1, 1): Formula(
        lambda a, b, t, z, v: ((1 + 2 * t + v) * (-a - b + t + 2 * v + z)
                               * (1 - a - b + t + 2 * v + z) / (2 * t)),
        lambda t: 1 / (1 + 2 * t)),
    (Kind.TYPE_II, 1, -1): Formula(lambda a, b, t, z, v: v, lambda t: 3 + 2 * t),
    (Kind.TYPE_II, 1, 0): Formula(lambda a, b, t, z, v: F(a, 2) - t + v, lambda t: 3 + 2 * t),
    (Kind.TYPE_II, 0, -1): Formula(
        lambda a, b, t, z, v: v * (-b + t + 2 * v + z), lambda t: (1 + 2 * t) / (2 * t * (t + 1))),
    (Kind.TYPE_II, 0, 0): Formula(
        lambda a, b, t, z, v: (1 + F(a, 2) + v) * (-b - t + 2 * v + z),
        lambda t: (1 + 2 * t) / (2 * t * (1 + t))),
    (Kind.TYPE_II, -1, -1): Formula(
        lambda a, b, t, z, v: v * (b - t - 2 * v - z) * (-1 - b + t + 2 * v + z) / (2 * t),
        lambda t: 1 / (1 + 2 * t)),
    (Kind.TYPE_II, -1, 0): Formula(
        lambda a, b, t, z, v: ((1 + F(a, 2) + t + v) * (-1 + b + t - 2 * v - z)
                               * (-b - t + 2 * v + z) / (2 * t)),
        lambda t: 1 / (1 + 2 * t)),
}


# Entries whose printed sign disagrees with direct extraction.  The
# printed factors (b - t - 2v - z) and (-1 + b + t - 2v - z) come out with
# the opposite sign in every case; only the overall sign is at stake.
SIGN_ERRATA = frozenset({(Kind.TYPE_II, -1, -1), (Kind.TYPE_II, -1, 0)})


def _negated(f: Formula) -> Formula:
    return Formula(lambda *args: -f.rational(*args), f.radicand)


ORDINARY_VALIDATED = {k: (_negated(f) if k in SIGN_ERRATA else f) for k, f in ORDINARY.items()}
REDUCED_VALIDATED = {k: (_negated(f) if k in SIGN_ERRATA else f) for k, f in REDUCED.items()}


def formula_kind(a: int, t2_src: int, t2_dst: int) -> Kind:
    """Which table applies to a source/target pair.

    Both labels sit on one side of t = a/2 (a generator changes t by at
    most one); an ambiguous endpoint takes the type of the other one.
    """
    if t2_src > a or t2_dst > a:
        return Kind.TYPE_I
    if t2_src < a or t2_dst < a:
        return Kind.TYPE_II
    return Kind.TYPE_I


def _evaluate(table, kind, a, b, t, z, v, dt, dv) -> RootSum:
    t, z = F(t), F(z)
    if t + dt < 0 or (t == 0 and dt != 1):
        return ZERO
    f = table.get((kind, dt, dv))
    if f is None:
        return ZERO
    return canonicalize_root(f.rational(a, b, t, z, v), f.radicand(t))


def ordinary_generic_formula(kind: Kind, a, b, t, z, v, dt, dv, *, printed: bool = False) -> RootSum:
    """(t+dt, t-1, z+1, v+dv | G-1 | t, t, z, v); 0 where the tables have no entry.

    ``printed=True`` keeps the typeset signs of the :data:`SIGN_ERRATA` entries.
    """
    return _evaluate(ORDINARY if printed else ORDINARY_VALIDATED, kind, a, b, t, z, v, dt, dv)


def reduced_generic_formula(kind: Kind, a, b, t, z, v, dt, dv, *, printed: bool = False) -> RootSum:
    """(t+dt, z+1, v+dv || G || t, z, v); 0 where the tables have no entry."""
    return _evaluate(REDUCED if printed else REDUCED_VALIDATED, kind, a, b, t, z, v, dt, dv)
