"""The ten sp(4) generators acting on polynomials.

Root generators are first-order differential operators ``sum c * x_i d/dx_j``.
The Cartan elements T0 and Z act diagonally by the (m, z) weight of each
monomial.  Operators act on unreduced polynomials; call
:func:`sp4states.poly.reduce` explicitly afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .poly import (
    NVARS,
    Monomial,
    Poly,
    Var,
    bargmann,
    mono_weight2,
    monomials_of_degree,
    unit,
)
from .scalar import SQRT2, RootSum

HALF_SQRT2 = SQRT2 * Fraction(1, 2)

a_, b_, g_, d_, eta_, xi_, zeta_, k_, th_ = (
    Var.ALPHA, Var.BETA, Var.GAMMA, Var.DELTA, Var.ETA,
    Var.XI, Var.ZETA, Var.KAPPA, Var.THETA,
)


@dataclass(frozen=True)
class LinOp:
    """First-order operator: sum of ``coef * mult * d/d(deriv)`` terms."""

    name: str
    terms: tuple[tuple[RootSum, Monomial, int], ...]
    shift2: tuple[int, int] = (0, 0)

    def __call__(self, p: Poly) -> Poly:
        return apply(self, p)


@dataclass(frozen=True)
class DiagonalOp:
    """Multiplies each monomial by a rational function of its doubled weight."""

    name: str
    eigen: Callable[[Monomial], Fraction] = field(compare=False)
    shift2: tuple[int, int] = (0, 0)

    def __call__(self, p: Poly) -> Poly:
        return apply(self, p)


def _op(name: str, shift2, *terms) -> LinOp:
    return LinOp(name, tuple((RootSum.coerce(c), unit(m), d) for c, m, d in terms), shift2)


def apply(op, p: Poly) -> Poly:
    """Exact action of a generator on ``p`` (no reduction)."""
    if isinstance(op, DiagonalOp):
        return Poly({m: c * op.eigen(m) for m, c in p.terms.items()})
    acc: dict[Monomial, RootSum] = {}
    for m, c in p.terms.items():
        for coef, mult, d in op.terms:
            e = m[d]
            if not e:
                continue
            n = list(m)
            n[d] -= 1
            for i in range(NVARS):
                n[i] += mult[i]
            n = tuple(n)
            v = coef * c * e
            acc[n] = acc[n] + v if n in acc else v
    return Poly(acc)


T_PLUS = _op("T+", (2, 0),
             (1, a_, g_), (1, b_, d_), (SQRT2, xi_, th_), (SQRT2, th_, k_))
T_MINUS = _op("T-", (-2, 0),
              (1, g_, a_), (1, d_, b_), (SQRT2, th_, xi_), (SQRT2, k_, th_))

G_P1 = _op("G+1", (2, 2), (1, a_, d_), (1, eta_, k_), (1, xi_, zeta_))
G_M1 = _op("G-1", (-2, 2), (-1, g_, b_), (1, k_, zeta_), (1, eta_, xi_))
G_0 = _op("G0", (0, 2),
          (HALF_SQRT2, g_, d_), (-HALF_SQRT2, a_, b_), (1, th_, zeta_), (-1, eta_, th_))

GB_P1 = _op("Gb+1", (2, -2), (1, b_, g_), (-1, xi_, eta_), (-1, zeta_, k_))
GB_M1 = _op("Gb-1", (-2, -2), (-1, d_, a_), (-1, k_, eta_), (-1, zeta_, xi_))
GB_0 = _op("Gb0", (0, -2),
           (HALF_SQRT2, d_, g_), (-HALF_SQRT2, b_, a_), (1, zeta_, th_), (-1, th_, eta_))

T_ZERO = DiagonalOp("T0", lambda m: Fraction(mono_weight2(m)[0], 2))
Z_OP = DiagonalOp("Z", lambda m: Fraction(mono_weight2(m)[1], 2))

GENERATORS = {
    op.name: op
    for op in (T_PLUS, T_MINUS, T_ZERO, Z_OP, G_P1, G_0, G_M1, GB_P1, GB_0, GB_M1)
}

G_VECTOR = {1: G_P1, 0: G_0, -1: G_M1}
GBAR_VECTOR = {1: GB_P1, 0: GB_0, -1: GB_M1}


def generator(name: str):
    try:
        return GENERATORS[name]
    except KeyError:
        raise KeyError(f"unknown generator {name!r}; expected one of {sorted(GENERATORS)}") from None


def weight_ops():
    return T_ZERO, Z_OP


def commutator(x, y, p: Poly) -> Poly:
    return apply(x, apply(y, p)) - apply(y, apply(x, p))


def power(op, p: Poly, k: int) -> Poly:
    for _ in range(k):
        p = apply(op, p)
    return p


# alpha<->delta, beta<->gamma, eta<->zeta, xi<->kappa, theta fixed
INVOLUTION_PERM = (d_, g_, b_, a_, zeta_, k_, eta_, xi_, th_)


def involution(p: Poly) -> Poly:
    return p.substitute_vars(INVOLUTION_PERM)


def all_monomials(max_degree: int, min_degree: int = 0) -> Iterable[Monomial]:
    for total in range(min_degree, max_degree + 1):
        for da in range(total + 1):
            yield from monomials_of_degree(da, total - da)


@dataclass
class AdjointReport:
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def adjoint_check(op, conj, degree_bound: int, sign: int = 1) -> AdjointReport:
    """Check ``<conj(p), q> == sign * <p, op(q)>`` on all monomial pairs.

    Pairs are restricted to degrees 1..degree_bound with matching weights so
    the pairing can be nonzero.
    """
    report = AdjointReport()
    if degree_bound < 1:
        return report
    monos = list(all_monomials(degree_bound, 1))
    by_weight: dict = {}
    for m in monos:
        by_weight.setdefault((sum(m[:4]), sum(m[4:]), mono_weight2(m)), []).append(m)
    dm, dz = op.shift2
    for q in monos:
        pq = Poly.monomial(q)
        image = apply(op, pq)
        w = mono_weight2(q)
        key = (sum(q[:4]), sum(q[4:]), (w[0] + dm, w[1] + dz))
        for p in by_weight.get(key, ()):
            pp = Poly.monomial(p)
            lhs = bargmann(apply(conj, pp), pq)
            rhs = bargmann(pp, image) * sign
            report.pairs_checked += 1
            if lhs != rhs:
                report.violations.append((p, q, lhs, rhs))
    return report


def hermitian_pairs():
    """(op, conj, sign) triples: conj(Gb_i) relation  Gb_i = (-1)^i G_{-i}^dagger."""
    out = [(T_PLUS, T_MINUS, 1), (T_MINUS, T_PLUS, 1)]
    for i in (1, 0, -1):
        # <Gb_i p, q> = (-1)^i <p, G_{-i} q>
        out.append((G_VECTOR[-i], GBAR_VECTOR[i], (-1) ** (i % 2)))
    return out
