"""Command-line entry point.

Exit status: 0 when every requested check passes, 2 when a closed form
disagrees with its oracle (the table is still written), 1 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .basis import StateLabel, check_label, doubled, state
from .chargen import dim, weyl_dim
from .errors import Sp4Error
from .matel.extract import EXTRACTABLE, extract_ordinary, to_reduced
from .matel.tables import formula_ordinary
from .matel.verify import SUITES, verify
from .serialize import FORMAT_ENV, FORMATS, branch_rows, default_format, me_row, render, weight_rows

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _half(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if (2 * x).denominator != 1:
        raise argparse.ArgumentTypeError(f"not a half-integer: {text!r}")
    return x


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV} or plain)")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = _Parser(prog="sp4states", description="Exact Sp(4) > SU(2) x U(1) character states.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("dim", "dimension of (a, b)"), ("weights", "weight multiplicities"),
                        ("branch", "SU(2) x U(1) content with missing labels")):
        c = sub.add_parser(name, parents=[common], help=help_)
        c.add_argument("a", type=_nonneg)
        c.add_argument("b", type=_nonneg)

    c = sub.add_parser("state", parents=[common], help="one basis state as a polynomial")
    _label_args(c)
    c.add_argument("--m", type=_half, help="T0 eigenvalue (default t)")

    c = sub.add_parser("matelem", parents=[common], help="closed-form and/or extracted matrix elements")
    _label_args(c)
    c.add_argument("--formula", action="store_true", help="evaluate the closed forms")
    c.add_argument("--extract", action="store_true", help="recompute from polynomial action")
    _me_args(c)

    c = sub.add_parser("extract", parents=[common], help="same as matelem --extract")
    _label_args(c)
    _me_args(c)

    c = sub.add_parser("verify", parents=[common], help="run a verification suite")
    c.add_argument("--suite", required=True, choices=SUITES + ("all",))
    c.add_argument("--max-sum", type=_nonneg, default=4,
                   help="bound on a+b (polynomial degree for the algebra suites)")
    c.add_argument("--max-label", type=_nonneg, default=None,
                   help="dimensions suite: check every a, b <= this instead")
    c.add_argument("--strict-printed", action="store_true",
                   help="test formulas as printed, so known errata fail the run")
    return p


def _label_args(c):
    c.add_argument("a", type=_nonneg)
    c.add_argument("b", type=_nonneg)
    c.add_argument("--t", type=_half, required=True)
    c.add_argument("--z", type=_half, required=True)
    c.add_argument("--v", type=_nonneg, default=0)


def _me_args(c):
    c.add_argument("--op", choices=sorted(EXTRACTABLE), default="G-1")
    c.add_argument("--reduced", action="store_true", help="emit reduced elements")
    c.add_argument("--printed", action="store_true", help="closed forms exactly as typeset")


def _label(args) -> StateLabel:
    lab = StateLabel(args.a, args.b, doubled(args.t), doubled(args.z), args.v)
    check_label(lab)
    return lab


def _cmd_dim(args):
    d = dim(args.a, args.b)
    status = EXIT_OK if d == weyl_dim(args.a, args.b) else EXIT_MISMATCH
    if args.fmt == "plain":
        return f"{d}\n", status
    return render([{"a": args.a, "b": args.b, "dim": d, "weyl": weyl_dim(args.a, args.b)}], args.fmt), status


def _cmd_state(args):
    lab = _label(args)
    if args.m is not None:
        lab = lab.with_m(doubled(args.m))
        check_label(lab)
    p = state(lab)
    if args.fmt == "plain":
        return f"{p}\n", EXIT_OK
    row = {"a": lab.a, "b": lab.b, "label": lab.to_json(), "poly": str(p), "terms": p.to_json()}
    return render([row], args.fmt), EXIT_OK


def _me(args, formula: bool, extract: bool):
    lab = _label(args)
    try:
        closed = formula_ordinary(lab.a, lab.b, lab.t2, lab.z2, lab.v, args.op, printed=args.printed) \
            if formula else None
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None
    found = extract_ordinary(lab.a, lab.b, lab.t2, lab.z2, lab.v, args.op) if extract else None
    base = found if found is not None else closed
    conv = (lambda me: to_reduced(me)) if args.reduced else (lambda me: me)
    rows, status = [], EXIT_OK
    for i, me in enumerate(base):
        row = me_row(conv(me), reduced=args.reduced)
        if formula and extract:
            f = conv(closed[i]).value
            row["formula"] = str(f)
            row["match"] = f == conv(me).value
            if not row["match"]:
                status = EXIT_MISMATCH
        rows.append(row)
    return render(rows, args.fmt), status


def _cmd_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = [verify(s, args.max_sum, max_label=args.max_label, strict_printed=args.strict_printed)
               for s in suites]
    status = EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH
    if args.fmt == "json":
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        return render(payload, "json"), status
    if args.fmt == "csv":
        rows = []
        for r in reports:
            for c in r.checks:
                rows.append({"suite": r.suite, "kind": "check", "name": c["check"], "status": c["status"],
                             "params": c["params"], "lhs": c["lhs"], "rhs": c["rhs"]})
            for e in r.errata:
                rows.append({"suite": r.suite, "kind": "erratum", "name": e["formula"], "status": "printed",
                             "params": e["params"], "lhs": e["printed"], "rhs": e["oracle"]})
        return render(rows, "csv"), status
    return "".join(_plain_report(r) for r in reports), status


def _plain_report(r) -> str:
    lines = [f"suite {r.suite} {'PASS' if r.ok else 'FAIL'}: {len(r.checks) - len(r.failures)} passed,"
             f" {len(r.failures)} failed, {len(r.errata)} printed-form deviations"]
    by_name: dict = {}
    for c in r.checks:
        by_name.setdefault(c["check"], []).append(c)
    for name in sorted(by_name):
        cs = by_name[name]
        bad = sum(c["status"] == "fail" for c in cs)
        line = f"  {name}: {len(cs) - bad}/{len(cs)}"
        if len(cs) == 1:
            line += f"  [{cs[0]['lhs']} vs {cs[0]['rhs']}]"
        lines.append(line)
    for c in r.failures:
        lines.append(f"  FAIL {c['check']} {c['params']}: {c['lhs']} != {c['rhs']}")
    for name, n in r.summary()["errata"].items():
        lines.append(f"  erratum {name}: {n} cases")
    return "\n".join(lines) + "\n"


VALUE_OPTIONS = ("--t", "--z", "--m")


def _glue_negative_values(argv):
    """Let ``--z -1/2`` through: argparse takes "-1/2" for an option otherwise."""
    out = []
    for item in argv:
        if out and out[-1] in VALUE_OPTIONS and item[:1] == "-" and item[1:2].isdigit():
            out[-1] = f"{out[-1]}={item}"
        else:
            out.append(item)
    return out



def run(argv=None) -> int:
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
        args.fmt = args.format or default_format()
        cmd = args.command
        if cmd == "dim":
            text, status = _cmd_dim(args)
        elif cmd == "weights":
            text, status = render(weight_rows(args.a, args.b), args.fmt), EXIT_OK
        elif cmd == "branch":
            text, status = render(branch_rows(args.a, args.b), args.fmt), EXIT_OK
        elif cmd == "state":
            text, status = _cmd_state(args)
        elif cmd == "matelem":
            if not (args.formula or args.extract):
                raise UsageError("matelem: give --formula, --extract or both")
            text, status = _me(args, args.formula, args.extract)
        elif cmd == "extract":
            text, status = _me(args, False, True)
        else:
            text, status = _cmd_verify(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except Sp4Error as e:
        print(f"sp4states: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); not an error here
        sys.stderr.close()
        code = EXIT_OK
    sys.exit(code)
