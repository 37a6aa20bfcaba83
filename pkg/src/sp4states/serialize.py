"""Row builders and the json / csv / plain renderers shared by the CLI.

Every table is a list of flat-ish dicts.  Rendering is deterministic:
rows keep the order they were built in, JSON keys are sorted, and exact
values are written as strings (never floats).
"""

from __future__ import annotations

import csv
import io
import json
import os

from .basis import StateLabel, branch, half
from .chargen import weights
from .errors import NotSingleTerm
from .scalar import RootSum

FORMATS = ("json", "csv", "plain")
FORMAT_ENV = "SP4STATES_FORMAT"


def default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "plain")
    return fmt if fmt in FORMATS else "plain"


def value_fields(x: RootSum) -> dict:
    """Exact value as text, as RootSum JSON, and as (sign, square) when single-term."""
    out = {"value": str(x), "value_terms": x.to_json()}
    try:
        sign, square = x.as_signed_sqrt()
        out["value_sqsign"] = {"sign": sign, "square": str(square)}
    except NotSingleTerm:
        out["value_sqsign"] = None
    return out


def label_fields(lab: StateLabel, *, with_m: bool = True) -> dict:
    d = lab.to_json()
    if not with_m:
        d.pop("m")
    return d


def me_row(me, *, reduced: bool = False) -> dict:
    row = {
        "a": me.source.a,
        "b": me.source.b,
        "op": me.op,
        "src": label_fields(me.source, with_m=not reduced),
        "dst": label_fields(me.target, with_m=not reduced),
        "element": "reduced" if reduced else "ordinary",
    }
    row.update(value_fields(me.value))
    return row


def branch_rows(a: int, b: int) -> list[dict]:
    rows = []
    for (t2, z2), vs in branch(a, b).items():
        for v in vs:
            lab = StateLabel(a, b, t2, z2, v)
            rows.append({"t": half(t2), "z": half(z2), "v": v, "kind": lab.kind.value, "size": t2 + 1})
    return rows


def weight_rows(a: int, b: int) -> list[dict]:
    return [{"m": half(m2), "z": half(z2), "multiplicity": n} for (m2, z2), n in weights(a, b).items()]


def _flatten(row: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in row.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v, sort_keys=True, ensure_ascii=False)
        else:
            out[key] = "" if v is None else v
    return out


def render(payload, fmt: str) -> str:
    """Render a list of rows (or a dict report) in one of :data:`FORMATS`."""
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    rows = payload if isinstance(payload, list) else [payload]
    flat = [_flatten(r) for r in rows]
    columns: list[str] = []
    for r in flat:
        for k in r:
            if k not in columns:
                columns.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", restval="")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    if fmt == "plain":
        if not flat:
            return ""
        cells = [columns] + [[str(r.get(c, "")) for c in columns] for r in flat]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
