"""Acceptance criteria AC1-AC8.

Run ``python tests/test_acceptance.py`` for one PASS/FAIL line per
criterion, or let pytest collect ``test_acceptance`` (``-s`` shows
the same lines).  Every comparison is exact; each criterion also has a
wall-clock budget.
"""

from __future__ import annotations

import sys
import time
from functools import lru_cache

import pytest

from sp4states.matel.verify import Report, _limit, verify

BUDGET = {"AC1": 30, "AC2": 30, "AC3": 60, "AC4": 60, "AC5": 120, "AC6": 600, "AC7": 60, "AC8": 600}


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _count(rep, name):
    cs = [c for c in rep.checks if c["check"] == name]
    return len(cs), sum(c["status"] == "fail" for c in cs)


@lru_cache(maxsize=None)
def _generic():
    return _timed(lambda: verify("generic", 5))


def ac1():
    rep, dt = _timed(lambda: verify("dimensions", 0, max_label=6))
    n, bad = _count(rep, "named dimension")
    return rep.ok and n == 5, dt, f"{len(rep.checks)} checks, five named dimensions, Weyl for a,b <= 6"


def ac2():
    rep, dt = _timed(lambda: verify("branching", 6))
    return rep.ok, dt, f"{len(rep.checks)} checks for a+b <= 6"


def ac3():
    (c, i), dt = _timed(lambda: (verify("commutators", 6), verify("involution", 6)))
    n = c.checks[0]["params"].get("monomials", 0)
    return c.ok and i.ok and n > 1000, dt, f"{len(c.checks)} commutator and {len(i.checks)} involution checks on {n} monomials"


def ac4():
    rep, dt = _timed(lambda: verify("degenerate-a", 6))
    names = {e["formula"] for e in rep.errata}
    ok = rep.ok and _count(rep, "ordinary G0 same t (a,0)")[0] > 0
    return ok, dt, f"{len(rep.checks)} checks; recorded deviations: {sorted(names)}"


def ac5():
    rep, dt = _timed(lambda: verify("degenerate-b", 5))
    wanted = [c for c in rep.checks if c["check"] in (
        "N00 for b=4", "N00 for b=4 from projection", "wanted part of the b=4 scalar state",
        "norm of the b=4 wanted part")]
    slash = [e for e in rep.errata if e["formula"] == "reduced G (0,b), printed"]
    ok = rep.ok and len(wanted) == 4 and all(c["status"] == "pass" for c in wanted) and slash
    return ok, dt, f"{len(rep.checks)} checks; printed (0,b) line deviates in {len(slash)} cases"


def ac6():
    rep, dt = _generic()
    tables = [_count(rep, n) for n in ("ordinary generic table", "reduced generic table", "long cubic term")]
    errata = rep.summary()["errata"]
    ok = rep.ok and all(n and not bad for n, bad in tables)
    return ok, dt, (f"{tables[0][0]} ordinary, {tables[1][0]} reduced, {tables[2][0]} cubic terms;"
                    f" errata {errata}")


def ac7():
    def run():
        rep = Report("limits", {"a": 4, "b": 4})
        for n in range(1, 5):
            _limit(rep, n, 0)
            _limit(rep, 0, n)
        return rep
    rep, dt = _timed(run)
    return rep.ok and len(rep.checks) > 100, dt, f"{len(rep.checks)} extracted elements at b=0 and a=0"


def ac8():
    rep, dt = _generic()
    n, bad = _count(rep, "type separation")
    return rep.ok and n > 0 and bad == 0, dt, f"{n} strict type I / type II coefficients in full-basis expansions, all zero"


CRITERIA = {"AC1": ac1, "AC2": ac2, "AC3": ac3, "AC4": ac4, "AC5": ac5, "AC6": ac6, "AC7": ac7, "AC8": ac8}


def evaluate(name):
    ok, dt, detail = CRITERIA[name]()
    ok = bool(ok) and dt < BUDGET[name]
    line = f"{name} {'PASS' if ok else 'FAIL'} ({dt:.1f}s, budget {BUDGET[name]}s): {detail}"
    return ok, line


@pytest.mark.parametrize("name", sorted(CRITERIA))
def test_acceptance(name):
    ok, line = evaluate(name)
    print(line)
    assert ok, line


def main() -> int:
    results = [evaluate(name) for name in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    return 0 if all(ok for ok, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
