"""Exact scalars of the form  sum_n q_n * sqrt(n).

Rational numbers are :class:`fractions.Fraction`.  A :class:`RootSum` is a
finite sum of rational multiples of square roots of squarefree positive
integers; the radicand 1 carries the rational part.  Values are immutable
and kept canonical, so structural equality is numeric equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import NonInvertibleScalar, NotSingleTerm

Rational = Fraction
Scalar = Union["RootSum", int, Fraction]


def as_fraction(x) -> Fraction:
    """Parse ``x`` (int, Fraction or a ``"p/q"`` string) into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, s)`` with ``n == k*k*s`` and ``s`` squarefree.

    Trial division only; radicands met in practice are small.
    """
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    k, s = 1, 1
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            k *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= m
    return k, s


class RootSum:
    """Immutable canonical sum of rational multiples of square roots."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] | Iterable = ()):
        # Caller guarantees squarefree radicands; zero coefficients dropped.
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for n, q in items:
            if q:
                clean[n] = Fraction(q)
        self._terms = tuple(sorted(clean.items()))
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def coerce(cls, x: Scalar) -> "RootSum":
        if isinstance(x, RootSum):
            return x
        q = as_fraction(x)
        return cls(((1, q),)) if q else ZERO

    @classmethod
    def sqrt(cls, r) -> "RootSum":
        return canonicalize_root(1, r)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def radicands(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(n == 1 for n, _ in self._terms)

    def rational_part(self) -> Fraction:
        for n, q in self._terms:
            if n == 1:
                return q
        return Fraction(0)

    def coefficient(self, radicand: int) -> Fraction:
        for n, q in self._terms:
            if n == radicand:
                return q
        return Fraction(0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Scalar) -> "RootSum":
        try:
            other = RootSum.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for n, q in other._terms:
            acc[n] = acc.get(n, 0) + q
        return RootSum(acc)

    __radd__ = __add__

    def __neg__(self) -> "RootSum":
        return RootSum((n, -q) for n, q in self._terms)

    def __pos__(self) -> "RootSum":
        return self

    def __sub__(self, other: Scalar) -> "RootSum":
        try:
            other = RootSum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "RootSum":
        return RootSum.coerce(other) - self

    def __mul__(self, other: Scalar) -> "RootSum":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return RootSum((n, q * other) for n, q in self._terms)
        if not isinstance(other, RootSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for m, p in self._terms:
            for n, q in other._terms:
                if m == 1:
                    k, s = 1, n
                elif n == 1:
                    k, s = 1, m
                elif m == n:
                    k, s = m, 1
                else:
                    k, s = squarefree_split(m * n)
                acc[s] = acc.get(s, 0) + p * q * k
        return RootSum(acc)

    __rmul__ = __mul__

    def invert(self) -> "RootSum":
        """Exact inverse; supported for at most two radicands."""
        t = self._terms
        if not t:
            raise NonInvertibleScalar("division by zero")
        if len(t) == 1:
            (n, q), = t
            return RootSum(((n, 1 / (q * n)),))
        if len(t) == 2:
            (m, p), (n, q) = t
            norm = p * p * m - q * q * n
            return RootSum(((m, p / norm), (n, -q / norm)))
        raise NonInvertibleScalar(f"cannot invert {self}: {len(t)} radicands")

    def __truediv__(self, other: Scalar) -> "RootSum":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise NonInvertibleScalar("division by zero")
            return RootSum((n, q / other) for n, q in self._terms)
        if not isinstance(other, RootSum):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other: Scalar) -> "RootSum":
        return RootSum.coerce(other) * self.invert()

    def __pow__(self, k: int) -> "RootSum":
        if k < 0:
            return self.invert() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RootSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RootSum.coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational_part())
            else:
                self._hash = hash(self._terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sign(self) -> int:
        """Sign of the real value (exact for one or two radicands)."""
        t = self._terms
        if not t:
            return 0
        if len(t) == 1:
            return 1 if t[0][1] > 0 else -1
        if len(t) == 2:
            (m, p), (n, q) = t
            sp, sq = (p > 0) - (p < 0), (q > 0) - (q < 0)
            if sp == sq:
                return sp
            # p*sqrt(m) + q*sqrt(n) has the sign of the larger magnitude
            return sp if p * p * m > q * q * n else sq
        return 1 if float(self) > 0 else -1

    # -- conversion -------------------------------------------------------

    def __float__(self) -> float:
        return float(sum(float(q) * n ** 0.5 for n, q in self._terms))

    def as_signed_sqrt(self) -> tuple[int, Fraction]:
        """``(sign, x*x)`` for a single-term value; ``(+1, 0)`` for zero."""
        t = self._terms
        if not t:
            return 1, Fraction(0)
        if len(t) != 1:
            raise NotSingleTerm(f"{self} has {len(t)} radicands")
        (n, q), = t
        return (1 if q > 0 else -1), q * q * n

    def to_json(self) -> list[dict]:
        return [{"coef": _frac_str(q), "radicand": n} for n, q in self._terms]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "RootSum":
        out = ZERO
        for row in rows:
            out = out + canonicalize_root(Fraction(row["coef"]), int(row["radicand"]))
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, q in self._terms:
            mag = abs(q)
            if n == 1:
                body = _frac_str(mag)
            elif mag == 1:
                body = f"sqrt({n})"
            elif mag.denominator == 1:
                body = f"{mag}*sqrt({n})"
            else:
                body = f"({mag})*sqrt({n})"
            parts.append(("-" if q < 0 else "+", body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"RootSum({self})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def canonicalize_root(c, r) -> RootSum:
    """Canonical form of ``c * sqrt(r)`` for rationals ``c`` and ``r >= 0``."""
    c, r = as_fraction(c), as_fraction(r)
    if r < 0:
        raise ValueError(f"negative radicand {r}")
    if not c or not r:
        return ZERO
    p, q = r.numerator, r.denominator
    k, s = squarefree_split(p * q)
    return RootSum(((s, c * k / q),))


def signed_sqrt(sign: int, square) -> RootSum:
    """Inverse of :meth:`RootSum.as_signed_sqrt`."""
    return canonicalize_root(1 if sign >= 0 else -1, square)


ZERO = RootSum()
ONE = RootSum(((1, Fraction(1)),))
SQRT2 = RootSum(((2, Fraction(1)),))
