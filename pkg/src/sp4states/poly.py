"""Polynomials in the nine fundamental-representation state variables.

The variables are the four (1,0) states alpha, beta, gamma, delta and the
five (0,1) states eta, xi, zeta, kappa, theta.  A monomial is a tuple of
nine exponents in that fixed order.  Weights (m, z) are kept in doubled
integer units throughout.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NonTermination, NotHomogeneous, NotInSpan, SingularBasis
from .linalg import row_reduce
from .scalar import ONE, ZERO, RootSum, Scalar, SQRT2

NVARS = 9
Monomial = tuple  # nine nonnegative ints


class Var(IntEnum):
    ALPHA = 0
    BETA = 1
    GAMMA = 2
    DELTA = 3
    ETA = 4
    XI = 5
    ZETA = 6
    KAPPA = 7
    THETA = 8

    @property
    def symbol(self) -> str:
        return SYMBOLS[self]

    @property
    def weight2(self) -> tuple[int, int]:
        """Doubled (m, z) weight."""
        return WEIGHTS2[self]

    @property
    def fundamental(self) -> str:
        return "A" if self <= Var.DELTA else "B"


SYMBOLS = ("α", "β", "γ", "δ", "η", "ξ", "ζ", "κ", "θ")
ASCII_NAMES = ("alpha", "beta", "gamma", "delta", "eta", "xi", "zeta", "kappa", "theta")

# doubled (m, z) for each variable
WEIGHTS2 = (
    (1, 1), (1, -1), (-1, 1), (-1, -1),
    (0, 2), (2, 0), (0, -2), (-2, 0), (0, 0),
)

A_VARS = (Var.ALPHA, Var.BETA, Var.GAMMA, Var.DELTA)
B_VARS = (Var.ETA, Var.XI, Var.ZETA, Var.KAPPA, Var.THETA)


def unit(v: int, power: int = 1) -> Monomial:
    e = [0] * NVARS
    e[v] = power
    return tuple(e)


ONE_MONO: Monomial = (0,) * NVARS


def mono(**powers: int) -> Monomial:
    """Build a monomial from ascii variable names, e.g. ``mono(alpha=2, xi=1)``."""
    e = [0] * NVARS
    for name, p in powers.items():
        e[ASCII_NAMES.index(name)] = p
    return tuple(e)


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(m, n))


def degrees(m: Monomial) -> tuple[int, int]:
    return sum(m[:4]), sum(m[4:])


def mono_weight2(m: Monomial) -> tuple[int, int]:
    return (
        sum(e * w[0] for e, w in zip(m, WEIGHTS2)),
        sum(e * w[1] for e, w in zip(m, WEIGHTS2)),
    )


def grlex_key(m: Monomial):
    """Sort key: graded lexicographic in the fixed variable order."""
    return (sum(m), m)


def monomials_of_degree(deg_a: int, deg_b: int) -> Iterator[Monomial]:
    """All monomials with the given A- and B-degrees."""
    for ea in _compositions(deg_a, 4):
        for eb in _compositions(deg_b, 5):
            yield ea + eb


def _compositions(n: int, k: int) -> Iterator[tuple]:
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _term_str(c: RootSum, m: Monomial) -> str:
    if m == ONE_MONO:
        return str(c)
    if c == ONE:
        return mono_str(m)
    if len(c.terms) == 1:
        n, q = c.terms[0]
        if n != 1 or q.denominator == 1:
            return f"{c}*{mono_str(m)}"
    return f"({c})*{mono_str(m)}"


def mono_str(m: Monomial) -> str:
    out = []
    for v, e in enumerate(m):
        if e == 1:
            out.append(SYMBOLS[v])
        elif e > 1:
            out.append(f"{SYMBOLS[v]}^{e}")
    return "".join(out) or "1"


class Poly:
    """Sparse polynomial: mapping Monomial -> nonzero RootSum."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for m, c in items:
            c = RootSum.coerce(c)
            if c:
                clean[tuple(m)] = c
        self.terms: dict[Monomial, RootSum] = clean

    @classmethod
    def monomial(cls, m: Monomial, coef: Scalar = ONE) -> "Poly":
        return cls({m: coef})

    @classmethod
    def var(cls, v: int) -> "Poly":
        return cls({unit(v): ONE})

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls({ONE_MONO: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m: Monomial) -> RootSum:
        return self.terms.get(tuple(m), ZERO)

    def sorted_terms(self) -> list[tuple[Monomial, RootSum]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc[m] + c if m in acc else c
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def scale(self, c: Scalar) -> "Poly":
        c = RootSum.coerce(c)
        if not c:
            return Poly()
        return Poly({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        acc: dict[Monomial, RootSum] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return Poly(acc)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        out = Poly.constant(ONE)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def derivative(self, v: int) -> "Poly":
        acc = {}
        for m, c in self.terms.items():
            e = m[v]
            if e:
                n = list(m)
                n[v] -= 1
                acc[tuple(n)] = c * e
        return Poly(acc)

    def substitute_vars(self, perm: Sequence[int]) -> "Poly":
        """Rename variable ``i`` to ``perm[i]`` in every monomial."""
        acc = {}
        for m, c in self.terms.items():
            n = [0] * NVARS
            for i, e in enumerate(m):
                n[perm[i]] += e
            acc[tuple(n)] = c
        return Poly(acc)

    # -- rendering / serialization ---------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            neg = len(c.terms) == 1 and c.sign() < 0
            body = _term_str(-c if neg else c, m)
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(m), "coef": c.to_json()} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "Poly":
        return cls({tuple(r["exponents"]): RootSum.from_json(r["coef"]) for r in rows})


def weight_of(p: Poly) -> tuple[int, int]:
    """Common doubled (m, z) weight of a weight-homogeneous nonzero polynomial."""
    if not p.terms:
        raise NotHomogeneous("zero polynomial has no weight")
    ws = {mono_weight2(m) for m in p.terms}
    if len(ws) != 1:
        raise NotHomogeneous(f"weights {sorted(ws)} in one polynomial")
    return ws.pop()


def bargmann(p: Poly, q: Poly) -> RootSum:
    """Pairing with <x^n, x^n> = n!; distinct monomials are orthogonal."""
    if len(p.terms) > len(q.terms):
        p, q = q, p
    out = ZERO
    for m, c in p.terms.items():
        d = q.terms.get(m)
        if d is not None:
            out = out + c * d * prod(factorial(e) for e in m)
    return out


# ---------------------------------------------------------------------------
# Incompatible-pair rewriting
# ---------------------------------------------------------------------------

_HALF_SQRT2 = SQRT2 * Fraction(1, 2)
A, Bt, G, D, ETA, XI, ZETA, K, TH = range(9)


def _rhs(*terms) -> tuple[tuple[Monomial, RootSum], ...]:
    return tuple((mono_mul(unit(i), unit(j)), RootSum.coerce(c)) for i, j, c in terms)


# (pair, replacement) in the fixed rule order
RULES: tuple[tuple[tuple[int, int], tuple], ...] = (
    ((A, K), _rhs((D, ETA, 1), (G, TH, _HALF_SQRT2))),
    ((G, XI), _rhs((Bt, ETA, -1), (A, TH, _HALF_SQRT2))),
    ((D, XI), _rhs((A, ZETA, 1), (Bt, TH, _HALF_SQRT2))),
    ((D, TH), _rhs((Bt, K, SQRT2), (G, ZETA, SQRT2))),
    ((XI, K), (
        (mono_mul(unit(ETA), unit(ZETA)), ONE),
        (unit(TH, 2), RootSum.coerce(Fraction(1, 2))),
    )),
)

INCOMPATIBLE_PAIRS = tuple(pair for pair, _ in RULES)

# Each rule strictly lowers this linear functional of the exponents
# (LHS value minus every RHS value is >= 1), so rewriting terminates.
TERMINATION_WEIGHTS = (2, 0, 0, 1, 0, 10, 0, 0, 0)


def termination_measure(m: Monomial) -> int:
    return sum(w * e for w, e in zip(TERMINATION_WEIGHTS, m))


def is_reduced_monomial(m: Monomial) -> bool:
    return all(not (m[i] and m[j]) for i, j in INCOMPATIBLE_PAIRS)


DEFAULT_ORDER = tuple(range(len(RULES)))


@lru_cache(maxsize=None)
def _normal_form(m: Monomial, order: tuple[int, ...]) -> tuple[tuple[Monomial, RootSum], ...]:
    for r in order:
        (i, j), rhs = RULES[r]
        if m[i] and m[j]:
            break
    else:
        return ((m, ONE),)
    rest = list(m)
    rest[i] -= 1
    rest[j] -= 1
    rest = tuple(rest)
    here = termination_measure(m)
    acc: dict[Monomial, RootSum] = {}
    for n, c in rhs:
        child = mono_mul(rest, n)
        if termination_measure(child) >= here:
            raise NonTermination(f"rule {r} does not lower the measure on {mono_str(m)}")
        for k, d in _normal_form(child, order):
            v = acc.get(k, ZERO) + c * d
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return tuple(acc.items())


def reduce(p: Poly, order: Sequence[int] = DEFAULT_ORDER) -> Poly:
    """Normal form free of the incompatible pairs (linear in ``p``).

    ``order`` permutes the priority of the five rules; the default follows
    the listed order.
    """
    order = tuple(order)
    acc: dict[Monomial, RootSum] = {}
    for m, c in p.terms.items():
        if is_reduced_monomial(m):
            acc[m] = acc[m] + c if m in acc else c
            continue
        if termination_measure(m) > 10 * sum(m) ** 2 + 10:
            raise NonTermination(f"measure bound exceeded on {mono_str(m)}")
        for k, d in _normal_form(m, order):
            v = c * d
            acc[k] = acc[k] + v if k in acc else v
    return Poly(acc)


def reduced_monomials(deg_a: int, deg_b: int) -> list[Monomial]:
    """Character-state monomials (no incompatible pair) of the given degrees."""
    return [m for m in monomials_of_degree(deg_a, deg_b) if is_reduced_monomial(m)]


# ---------------------------------------------------------------------------
# Coordinates in a polynomial basis
# ---------------------------------------------------------------------------

def express_in_basis(p: Poly, basis: Sequence[Poly], *, allowed_radicands=None) -> list[RootSum]:
    """Exact coefficients ``c`` with ``p == sum(c[i] * basis[i])``.

    Raises :class:`NotInSpan` when ``p`` lies outside the span and
    :class:`SingularBasis` when the basis is dependent.  With
    ``allowed_radicands`` every input coefficient is checked to lie in that
    subring before elimination.
    """
    if not basis:
        if p.terms:
            raise NotInSpan("nonzero polynomial, empty basis")
        return []
    monos = set(p.terms)
    for b in basis:
        monos.update(b.terms)
    monos = sorted(monos, key=grlex_key, reverse=True)
    rows = [[b.coefficient(m) for b in basis] + [p.coefficient(m)] for m in monos]
    if allowed_radicands is not None:
        allowed = set(allowed_radicands)
        for row in rows:
            for x in row:
                if not set(x.radicands()) <= allowed:
                    raise AssertionError(f"coefficient {x} outside the subring {sorted(allowed)}")
    n = len(basis)
    reduced, pivots = row_reduce(rows, n + 1)
    if n in pivots:
        raise NotInSpan("polynomial is outside the span of the basis")
    if len(pivots) < n:
        raise SingularBasis(f"basis of {n} polynomials has rank {len(pivots)}")
    out = [ZERO] * n
    for r, col in enumerate(pivots):
        out[col] = reduced[r][n]
    return out
