import json

import pytest

from sp4states.scalar import RootSum, canonicalize_root
from sp4states.serialize import FORMAT_ENV, branch_rows, default_format, render, value_fields, weight_rows


def test_value_fields_single_term():
    v = value_fields(canonicalize_root(-1, 3))
    assert v["value_sqsign"] == {"sign": -1, "square": "3"}
    assert json.loads(json.dumps(v["value_terms"])) == v["value_terms"]


def test_value_fields_two_terms_has_no_sqsign():
    x = RootSum.coerce(1) + canonicalize_root(1, 2)
    assert value_fields(x)["value_sqsign"] is None


def test_branch_rows_sizes_sum_to_dimension():
    assert sum(r["size"] for r in branch_rows(2, 1)) == 35
    assert sum(r["multiplicity"] for r in weight_rows(2, 1)) == 35


@pytest.mark.parametrize("fmt", ["json", "csv", "plain"])
def test_render_is_deterministic(fmt):
    rows = branch_rows(1, 1)
    assert render(rows, fmt) == render(branch_rows(1, 1), fmt)


def test_csv_flattens_nested_keys():
    out = render([{"a": {"b": 1}, "c": None}], "csv")
    assert out.splitlines() == ["a.b,c", "1,"]


def test_unknown_format():
    with pytest.raises(ValueError):
        render([], "xml")


def test_default_format_env(monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "csv")
    assert default_format() == "csv"
    monkeypatch.setenv(FORMAT_ENV, "bogus")
    assert default_format() == "plain"
