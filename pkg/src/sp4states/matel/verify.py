"""Named verification suites with machine-readable reports.

Each suite compares closed forms (or algebraic identities) against an
independent computation and records one entry per comparison, carrying
both sides as exact strings.  Known printed-formula deviations go to a
separate errata list: they do not fail a suite unless ``strict_printed``
is set, in which case the printed forms are the ones under test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..basis import (
    UNWANTED_SCALAR,
    Kind,
    StateLabel,
    branch,
    branch_dim,
    branch_labels,
    highest_state,
    involution_label,
    iter_states,
    lowered_state,
    multiplets_at,
    state,
    unwanted_projection,
)
from ..chargen import dim, dimension_identities, expand_branching_cell, weyl_dim
from ..liealg import (
    GBAR_VECTOR,
    GENERATORS,
    G_VECTOR,
    T_MINUS,
    T_PLUS,
    T_ZERO,
    Z_OP,
    adjoint_check,
    all_monomials,
    apply,
    hermitian_pairs,
    involution,
)
from ..linalg import row_reduce
from ..poly import Poly, bargmann, express_in_basis, mono, reduce, reduced_monomials
from ..scalar import ZERO, RootSum, canonicalize_root
from . import degenerate as dg
from .cg import vector_cg
from .direct import direct_me, direct_norm, direct_rme, wanted_state
from .extract import extract_direct, extract_ordinary, to_reduced
from .generic import LONG_CUBIC_TERMS, formula_kind, ordinary_generic_formula, reduced_generic_formula
from .gram import gram_block

F = Fraction
SUITES = (
    "dimensions", "branching", "commutators", "involution",
    "hermiticity", "degenerate-a", "degenerate-b", "generic",
)


@dataclass
class Report:
    suite: str
    bounds: dict
    strict_printed: bool = False
    checks: list = field(default_factory=list)
    errata: list = field(default_factory=list)

    def check(self, name: str, params: dict, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.checks.append({
            "check": name, "params": params, "status": "pass" if ok else "fail",
            "lhs": str(lhs), "rhs": str(rhs),
        })
        return ok

    def printed(self, name: str, params: dict, printed, validated, oracle) -> None:
        """Compare a printed form with the oracle; a deviation becomes an erratum."""
        if printed == oracle:
            return
        self.errata.append({
            "formula": name, "params": params,
            "printed": str(printed), "validated": str(validated), "oracle": str(oracle),
        })
        if self.strict_printed:
            self.check(name + " (printed)", params, printed, oracle)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c["status"] == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        counts: dict = {}
        for c in self.checks:
            row = counts.setdefault(c["check"], {"pass": 0, "fail": 0})
            row[c["status"]] += 1
        errata: dict = {}
        for e in self.errata:
            errata[e["formula"]] = errata.get(e["formula"], 0) + 1
        return {"checks": dict(sorted(counts.items())), "errata": dict(sorted(errata.items()))}

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "strict_printed": self.strict_printed,
            "status": "pass" if self.ok else "fail",
            "passed": len(self.checks) - len(self.failures),
            "failed": len(self.failures),
            "summary": self.summary(),
            "checks": self.checks,
            "errata": self.errata,
        }


def _sqrt(q) -> RootSum:
    return canonicalize_root(1, q)


def _h(x) -> str:
    return str(F(x))


def _pairs(max_sum: int, min_each: int = 0):
    for s in range(2 * min_each, max_sum + 1):
        for a in range(min_each, s - min_each + 1):
            yield a, s - a


# -- dimensions / branching ----------------------------------------------------

NAMED_DIMENSIONS = {(1, 0): 4, (0, 1): 5, (2, 0): 10, (0, 2): 14, (1, 1): 16}


def suite_dimensions(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    for (a, b), d in NAMED_DIMENSIONS.items():
        rep.check("named dimension", {"a": a, "b": b}, dim(a, b), d)
    box = max_label if max_label is not None else max_sum
    for a in range(box + 1):
        for b in range(box + 1):
            p = {"a": a, "b": b}
            w = weyl_dim(a, b)
            rep.check("character expansion vs Weyl", p, dim(a, b), w)
            rep.check("character monomial count vs Weyl", p, len(reduced_monomials(a, b)), w)
    for name, (lhs, rhs) in dimension_identities().items():
        rep.check("product dimension identity", {"identity": name}, lhs, rhs)


def suite_branching(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    for a, b in _pairs(max_sum):
        p = {"a": a, "b": b}
        table = {k: len(vs) for k, vs in branch(a, b).items()}
        rep.check("basis branching vs generating function", p, table, expand_branching_cell(a, b))
        rep.check("sum of (2t+1) multiplicities vs Weyl", p, branch_dim(a, b), weyl_dim(a, b))


# -- algebra -------------------------------------------------------------------

class _Images:
    """Generator images of monomials, memoised; identities reuse them heavily."""

    def __init__(self):
        self.cache: dict = {}

    def __call__(self, op, p: Poly) -> Poly:
        acc: dict = {}
        for m, c in p.terms.items():
            key = (op.name, m)
            img = self.cache.get(key)
            if img is None:
                img = self.cache[key] = apply(op, Poly.monomial(m))
            for n, d in img.terms.items():
                acc[n] = acc[n] + c * d if n in acc else c * d
        return Poly(acc)

    def commutator(self, x, y, p: Poly) -> Poly:
        return self(x, self(y, p)) - self(y, self(x, p))


def _identities(act: _Images):
    """(name, lhs, rhs) callables on a polynomial."""
    G, Gb = G_VECTOR, GBAR_VECTOR
    com = act.commutator
    out = [
        ("[T+,T-] = 2 T0", lambda p: com(T_PLUS, T_MINUS, p), lambda p: act(T_ZERO, p).scale(2)),
        ("[T0,T+] = T+", lambda p: com(T_ZERO, T_PLUS, p), lambda p: act(T_PLUS, p)),
        ("[T0,T-] = -T-", lambda p: com(T_ZERO, T_MINUS, p), lambda p: -act(T_MINUS, p)),
        ("[Z,T+] = 0", lambda p: com(Z_OP, T_PLUS, p), lambda p: Poly()),
        ("[Z,T-] = 0", lambda p: com(Z_OP, T_MINUS, p), lambda p: Poly()),
    ]
    for name, vec, dz in (("G", G, 1), ("Gb", Gb, -1)):
        for q in (1, 0, -1):
            x = vec[q]
            out.append((f"[T0,{name}{q:+d}] = {q} {name}{q:+d}",
                        lambda p, x=x: com(T_ZERO, x, p), lambda p, x=x, q=q: act(x, p).scale(q)))
            out.append((f"[Z,{name}{q:+d}] = {dz} {name}{q:+d}",
                        lambda p, x=x: com(Z_OP, x, p), lambda p, x=x, dz=dz: act(x, p).scale(dz)))
            for s, ladder in ((1, T_PLUS), (-1, T_MINUS)):
                sign = "+" if s > 0 else "-"
                target = vec.get(q + s)
                if target is None:
                    out.append((f"[T{sign},{name}{q:+d}] = 0",
                                lambda p, L=ladder, x=x: com(L, x, p), lambda p: Poly()))
                    continue
                c2 = 2 - q * (q + s)
                out.append((f"[T{sign},{name}{q:+d}] = sqrt({c2}) {name}{q + s:+d}",
                            lambda p, L=ladder, x=x: com(L, x, p),
                            lambda p, y=target, c2=c2: act(y, p).scale(_sqrt(c2))))
    return out


def _monomial_polys(max_degree: int):
    return [Poly.monomial(m) for m in all_monomials(max_degree)]


def suite_commutators(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    polys = _monomial_polys(max_sum)
    for name, lhs, rhs in _identities(_Images()):
        bad = 0
        for p in polys:
            x, y = lhs(p), rhs(p)
            if x != y:
                bad += 1
                rep.check(name, {"monomial": str(p)}, x, y)
        if not bad:
            rep.check(name, {"monomials": len(polys), "max_degree": max_sum}, "all equal", "all equal")


# iota X iota = sign * Y for every generator
INVOLUTION_TABLE = {
    "T+": ("T-", 1), "T-": ("T+", 1), "T0": ("T0", -1), "Z": ("Z", -1),
    "G+1": ("Gb-1", -1), "G0": ("Gb0", -1), "G-1": ("Gb+1", -1),
    "Gb+1": ("G-1", -1), "Gb0": ("G0", -1), "Gb-1": ("G+1", -1),
}


def suite_involution(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    polys = _monomial_polys(max_sum)
    for name, (image, sign) in INVOLUTION_TABLE.items():
        x, y = GENERATORS[name], GENERATORS[image]
        label = f"iota {name} iota = {'-' if sign < 0 else ''}{image}"
        bad = 0
        for p in polys:
            lhs = involution(apply(x, involution(p)))
            rhs = apply(y, p).scale(sign)
            if lhs != rhs:
                bad += 1
                rep.check(label, {"monomial": str(p)}, lhs, rhs)
        if not bad:
            rep.check(label, {"monomials": len(polys), "max_degree": max_sum}, "all equal", "all equal")
    bad = sum(involution(involution(p)) != p for p in polys)
    rep.check("iota squared = 1", {"monomials": len(polys)}, bad, 0)
    for a, b in _pairs(min(max_sum, 4)):
        for lab in iter_states(a, b):
            rep.check("reduce(iota state) = state(iota label)", {"a": a, "b": b, "label": str(lab)},
                      reduce(involution(state(lab))), state(involution_label(lab)))


def suite_hermiticity(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    bound = min(max_sum, 4)
    for op, conj, sign in hermitian_pairs():
        r = adjoint_check(op, conj, bound, sign)
        name = f"<{conj.name} p, q> = {'-' if sign < 0 else ''}<p, {op.name} q>"
        for p, q, lhs, rhs in r.violations:
            rep.check(name, {"p": str(Poly.monomial(p)), "q": str(Poly.monomial(q))}, lhs, rhs)
        if r.ok:
            rep.check(name, {"pairs": r.pairs_checked, "max_degree": bound}, "all equal", "all equal")
    # on normalised wanted states of the degenerate irreps
    for a, b in [(a, 0) for a in range(1, bound + 1)] + [(0, b) for b in range(1, bound + 1)]:
        states = [(lab, wanted_state(a, b, lab.t2, lab.z2, lab.m2)) for lab in iter_states(a, b)]
        for i in (1, 0, -1):
            g, gb = G_VECTOR[i], GBAR_VECTOR[-i]
            sign = -1 if i % 2 else 1
            for ls, (ps, ns) in states:
                gp = apply(g, ps)
                for lq, (pq, nq) in states:
                    if (lq.m2, lq.z2) != (ls.m2 + 2 * i, ls.z2 + 2):
                        continue
                    lhs = bargmann(pq, gp)
                    rhs = bargmann(apply(gb, pq), ps) * sign
                    rep.check(f"<q, G{i:+d} p> = (-1)^{i % 2} <Gb{-i:+d} q, p> on wanted states",
                              {"a": a, "b": b, "p": str(ls), "q": str(lq)}, lhs, rhs)


# -- degenerate irreps ---------------------------------------------------------

def _a0_labels(a: int):
    h = F(a, 2)
    t = h
    while t >= 0:
        z = -t
        while z <= t:
            yield t, z
            z += 1
        t -= 1


def suite_degenerate_a(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    for a in range(0, max_sum + 1):
        for t, z in _a0_labels(a):
            p = {"a": a, "t": _h(t), "z": _h(z)}
            rep.check("norm (a,0)", p, dg.norm_a0(a, t, z), direct_norm(a, 0, t, z))
            for dt in (1, 0, -1):
                pd = dict(p, dt=dt)
                rep.check("reduced G (a,0)", pd, dg.rme_a0(a, t, z, dt), direct_rme(a, 0, "G", t, z, dt))
                oracle = direct_rme(a, 0, "Gb", t, z, dt)
                partner = dg.rme_a0(a, t + dt, z - 1, -dt) if dg.valid_a0(a, t + dt, z - 1) else ZERO
                validated = dg.gbar_from_g_validated(dt, partner)
                rep.check("reduced Gb from G (a,0)", pd, validated, oracle)
                rep.printed("reduced Gb from G, printed sign (a,0)", pd, dg.gbar_from_g(dt, partner), validated, oracle)
            t2, z2 = int(2 * t), int(2 * z)
            if dg.valid_a0(a, t + 1, z + 1):
                oracle = direct_me(a, 0, G_VECTOR[0], (t2, t2, z2), (t2 + 2, t2, z2 + 2))
                rep.check("ordinary G0 raise (a,0)", p, dg.ordinary_a0_raise(a, t, z), oracle)
                rep.check("ordinary G0 raise via norms (a,0)", p, dg.ordinary_a0_raise_via_norms(a, t, z), oracle)
            if dg.valid_a0(a, t, z + 1):
                oracle = direct_me(a, 0, G_VECTOR[0], (t2, t2, z2), (t2, t2, z2 + 2))
                validated = dg.ordinary_a0_same(a, t, z)
                rep.check("ordinary G0 same t (a,0)", p, validated, oracle)
                rep.check("ordinary G0 same t via norms (a,0)", p, dg.ordinary_a0_same_via_norms(a, t, z), oracle)
                for reading in sorted(dg.B_FACTOR_READINGS):
                    if reading != dg.B_FACTOR_VALIDATED:
                        rep.printed(f"ordinary G0 same t, factor read as {reading}", p,
                                    dg.ordinary_a0_same(a, t, z, reading), validated, oracle)


def _0b_labels(b: int):
    for t in range(b, -1, -1):
        for z in range(b, -b - 1, -1):
            if dg.valid_0b(b, t, z):
                yield F(t), F(z)


WANTED_B4 = Poly({
    mono(eta=2, zeta=2): F(15, 63), mono(eta=1, xi=1, zeta=1, kappa=1): F(40, 63),
    mono(eta=1, zeta=1, theta=2): F(-20, 63), mono(xi=2, kappa=2): F(8, 63),
    mono(xi=1, kappa=1, theta=2): F(-8, 63), mono(theta=4): F(2, 63),
})


def suite_degenerate_b(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    if max_sum >= 4:
        rep.check("N00 for b=4", {"b": 4}, dg.norm_0b(4, 0, 0), _sqrt(F(21, 20)))
        rep.check("N00 for b=4 from projection", {"b": 4}, direct_norm(0, 4, 0, 0), _sqrt(F(21, 20)))
        w = unwanted_projection(highest_state(StateLabel(0, 4, 0, 0, 2)), 4)
        rep.check("wanted part of the b=4 scalar state", {"b": 4}, w, WANTED_B4)
        rep.check("norm of the b=4 wanted part", {"b": 4}, bargmann(w, w), RootSum.coerce(F(20, 21)))
        rep.check("unwanted scalar is killed by T+", {}, apply(T_PLUS, UNWANTED_SCALAR), Poly())
    for b in range(0, max_sum + 1):
        for t, z in _0b_labels(b):
            p = {"b": b, "t": _h(t), "z": _h(z)}
            ti, zi = int(t), int(z)
            rep.check("norm (0,b)", p, dg.norm_0b(b, t, z), direct_norm(0, b, t, z))
            if t > 0 and dg.valid_0b(b, t - 1, z - 1):
                rep.check("norm ratio recursion (0,b)", p, dg.norm_ratio_0b(b, t, z),
                          dg.norm_0b(b, t, z) / dg.norm_0b(b, t - 1, z - 1))
            for dt, fn in ((1, dg.ordinary_0b_gbar_raise), (-1, dg.ordinary_0b_gbar_lower)):
                if dg.valid_0b(b, t + dt, z - 1):
                    oracle = direct_me(0, b, GBAR_VECTOR[-1], (2 * ti, 2 * ti, 2 * zi),
                                       (2 * (ti + dt), 2 * ti - 2, 2 * zi - 2))
                    rep.check("ordinary Gb-1 (0,b)", dict(p, dt=dt), fn(b, t, z), oracle)
            for dt in (1, -1):
                pd = dict(p, dt=dt)
                if dg.valid_0b(b, t + dt, z + 1):
                    oracle = direct_rme(0, b, "G", t, z, dt)
                    validated = dg.rme_0b(b, t, z, dt)
                    rep.check("reduced G (0,b), closed form = -<t+dt, z+1||G||t, z>", pd, validated, -oracle)
                    rep.printed("reduced G (0,b), printed", pd, dg.rme_0b(b, t, z, dt, printed=True),
                                validated, -oracle)
            for k in (1, 0, -1):
                pk = dict(p, dt=k)
                oracle = direct_rme(0, b, "Gb", t, z, k)
                partner = dg.rme_0b_g(b, t + k, z - 1, -k) if dg.valid_0b(b, t + k, z - 1) else ZERO
                validated = dg.gbar_from_g_validated(k, partner)
                rep.check("reduced Gb from G (0,b)", pk, validated, oracle)
                rep.printed("reduced Gb from G, printed sign (0,b)", pk, dg.gbar_from_g(k, partner), validated, oracle)


# -- generic irreps ------------------------------------------------------------

def _me_params(me) -> dict:
    return {"a": me.source.a, "b": me.source.b, "op": me.op, "src": str(me.source.highest()),
            "dst": str(me.target.highest()), "dt": me.dt2 // 2, "dv": me.dv}


def _generic_pair(rep: Report, a: int, b: int) -> dict:
    """Extraction checks for one irrep; returns reduced elements for the conjugation check."""
    reduced: dict = {"G-1": {}, "Gb-1": {}}
    for lab in branch_labels(a, b):
        for op in ("G-1", "Gb-1"):
            climbed = extract_ordinary(a, b, lab.t2, lab.z2, lab.v, op)
            single = {m.target: m.value for m in extract_direct(a, b, lab.t2, lab.z2, lab.v, op)}
            for me in climbed:
                p = _me_params(me)
                rep.check("climbing vs single solve", p, me.value, single.pop(me.target, ZERO))
                red = to_reduced(me)
                reduced[op][(lab.multiplet(), me.target.multiplet())] = red.value
                if op != "G-1":
                    continue
                kind = formula_kind(a, lab.t2, me.target.t2)
                args = (kind, a, b, lab.t, lab.z, lab.v, me.dt2 // 2, me.dv)
                pk = dict(p, kind=kind.value)
                validated = ordinary_generic_formula(*args)
                rep.check("ordinary generic table", pk, validated, me.value)
                rep.printed("ordinary generic table, printed", pk,
                            ordinary_generic_formula(*args, printed=True), validated, me.value)
                validated = reduced_generic_formula(*args)
                rep.check("reduced generic table", pk, validated, red.value)
                rep.printed("reduced generic table, printed", pk,
                            reduced_generic_formula(*args, printed=True), validated, red.value)
            for target, value in single.items():
                rep.check("climbing vs single solve", {"a": a, "b": b, "op": op, "src": str(lab),
                                                      "dst": str(target)}, ZERO, value)
    return reduced


def _metric(a: int, b: int, reduced: dict, dst: tuple, src: tuple) -> RootSum:
    vs, M = gram_block(a, b, dst[0], dst[1])
    row = M[vs.index(dst[2])]
    return sum((row[i] * reduced.get(((src), (dst[0], dst[1], w)), ZERO) for i, w in enumerate(vs)), ZERO)


def _conjugation(rep: Report, a: int, b: int, reduced: dict) -> None:
    """Gb against G through the Gram metric of the wanted parts."""
    for (src, dst), value in sorted(reduced["Gb-1"].items()):
        k = (dst[0] - src[0]) // 2
        p = {"a": a, "b": b, "src": list(src), "dst": list(dst), "k": k}
        lhs = _metric(a, b, reduced["Gb-1"], dst, src)
        partner = _metric(a, b, reduced["G-1"], src, dst)
        validated = dg.gbar_from_g_validated(k, partner)
        rep.check("conjugation Gb vs G (Gram metric)", p, lhs, validated)
        rep.printed("conjugation Gb vs G, printed sign", p, dg.gbar_from_g(k, partner), validated, lhs)


def _limit(rep: Report, a: int, b: int) -> None:
    """Extraction at b = 0 or a = 0 against the degenerate closed forms."""
    for lab in branch_labels(a, b):
        t, z = lab.t, lab.z
        for op in ("G-1", "Gb-1"):
            for me in extract_ordinary(a, b, lab.t2, lab.z2, lab.v, op):
                tp, zp = me.target.t, me.target.z
                k = int(tp - t)
                if b == 0:
                    ns, nt = dg.norm_a0(a, t, z), dg.norm_a0(a, tp, zp)
                    r = (dg.rme_a0(a, t, z, k) if op == "G-1"
                         else dg.gbar_from_g_validated(k, dg.rme_a0(a, tp, zp, -k)))
                else:
                    ns, nt = dg.norm_0b(b, t, z), dg.norm_0b(b, tp, zp)
                    r = (dg.rme_0b_g(b, t, z, k) if op == "G-1"
                         else dg.gbar_from_g_validated(k, dg.rme_0b_g(b, tp, zp, -k)))
                cg = vector_cg(lab.t2, lab.t2, -1, me.target.t2)
                normalized = cg * r * _sqrt(F(1, me.target.t2 + 1))
                rep.check("degenerate limit of extraction", _me_params(me), me.value, normalized * nt / ns)


CUBIC_EXPONENTS = tuple(e for e in product(range(4), repeat=5) if sum(e) <= 3)


def fit_long_cubic(max_sum: int):
    """Fit a general cubic in (a, b, t, v, z) to the extracted type-I (t-1, v) elements.

    Returns ``(rank, coefficients)``; the coefficients are unique when the
    rank equals the number of cubic monomials.
    """
    rows = []
    for a, b in _pairs(max_sum, 1):
        for lab in branch_labels(a, b):
            for me in extract_ordinary(a, b, lab.t2, lab.z2, lab.v):
                if (me.dt2, me.dv) != (-2, 0) or formula_kind(a, lab.t2, me.target.t2) is not Kind.TYPE_I:
                    continue
                point = (a, b, lab.t, lab.v, lab.z)
                row = []
                for e in CUBIC_EXPONENTS:
                    x = F(1)
                    for base, k in zip(point, e):
                        x *= F(base) ** k
                    row.append(RootSum.coerce(x))
                row.append(me.value * (2 * lab.t * (1 + 2 * lab.t)))
                rows.append(row)
    n = len(CUBIC_EXPONENTS)
    if not rows:
        return 0, {}
    reduced, pivots = row_reduce(rows, n + 1)
    if n in pivots:
        raise ArithmeticError("extracted values are not a cubic")
    return len(pivots), {CUBIC_EXPONENTS[c]: reduced[r][n] for r, c in enumerate(pivots)}


def _cubic_terms(rep: Report, max_sum: int) -> None:
    rank, fitted = fit_long_cubic(max_sum)
    if not rank:
        return
    n = len(CUBIC_EXPONENTS)
    printed = {e: RootSum.coerce(c) for c, e in LONG_CUBIC_TERMS}
    if rank < n:
        # too few labels to pin every coefficient; the table checks above
        # already compare the printed cubic point by point
        rep.check("long cubic: coefficients determined by the data", {"rank": rank, "unknowns": n},
                  "underdetermined", "underdetermined")
        return
    for e in CUBIC_EXPONENTS:
        rep.check("long cubic term", {"exponents(a,b,t,v,z)": list(e)}, printed.get(e, ZERO), fitted[e])
    rep.check("long cubic term count", {}, len(printed), sum(1 for x in fitted.values() if x))


STRICT = (Kind.TYPE_I, Kind.TYPE_II)


def _type_mixing(rep: Report, a: int, b: int) -> None:
    """Expand every G_q, Gb_q image over the complete basis of its weight.

    Starting from every m, not just highest states, the target weight space
    does contain states of the opposite strict type; their coefficients
    must all vanish.
    """
    spaces: dict = {}

    def space(m2, z2):
        if (m2, z2) not in spaces:
            labs = [StateLabel(a, b, t2, z2, v, m2) for t2 in range(a + 2 * b, abs(m2) - 1, -2)
                    for v in multiplets_at(a, b, t2, z2)]
            spaces[m2, z2] = labs, [lowered_state(lab)[1] for lab in labs]
        return spaces[m2, z2]

    for src in iter_states(a, b):
        if src.kind not in STRICT:
            continue
        p = lowered_state(src)[1]
        for dz2, family in ((2, G_VECTOR), (-2, GBAR_VECTOR)):
            for q, op in family.items():
                labs, basis = space(src.m2 + 2 * q, src.z2 + dz2)
                image = reduce(apply(op, p))
                coeffs = express_in_basis(image, basis) if labs else []
                for lab, c in zip(labs, coeffs):
                    if lab.kind in STRICT and lab.kind != src.kind:
                        rep.check("type separation", {"a": a, "b": b, "op": op.name, "src": str(src),
                                                      "dst": str(lab)}, c, ZERO)


def suite_generic(rep: Report, max_sum: int, max_label: int | None = None) -> None:
    for a, b in _pairs(max_sum, 1):
        reduced = _generic_pair(rep, a, b)
        _conjugation(rep, a, b, reduced)
        _type_mixing(rep, a, b)
    _cubic_terms(rep, max_sum)
    for n in range(1, max_sum + 1):
        _limit(rep, n, 0)
        _limit(rep, 0, n)


RUNNERS = {
    "dimensions": suite_dimensions,
    "branching": suite_branching,
    "commutators": suite_commutators,
    "involution": suite_involution,
    "hermiticity": suite_hermiticity,
    "degenerate-a": suite_degenerate_a,
    "degenerate-b": suite_degenerate_b,
    "generic": suite_generic,
}


def verify(suite: str, max_sum: int, *, max_label: int | None = None, strict_printed: bool = False) -> Report:
    """Run one named suite; ``max_sum`` bounds a + b (or the degree for algebra suites)."""
    if suite not in RUNNERS:
        raise KeyError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    bounds = {"max_sum": max_sum}
    if max_label is not None:
        bounds["max_label"] = max_label
    rep = Report(suite, bounds, strict_printed)
    RUNNERS[suite](rep, max_sum, max_label)
    return rep
