import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcradon.tables import TABLE_ANCHORS, Table, emit_table, format_table, parse_table, read_table

VALUES = st.one_of(
    st.floats(allow_nan=True, allow_infinity=True),
    st.integers(-(10**6), 10**6),
    st.booleans(),
    st.sampled_from(["direct", "transfer", "radon"]),
)


def _same(a, b):
    if isinstance(a, float) and math.isnan(a):
        return isinstance(b, float) and math.isnan(b)
    return a == b and type(a) is type(b)


@pytest.mark.parametrize("fmt", ["csv", "json"])
@given(rows=st.lists(st.tuples(VALUES, VALUES), max_size=6))
def test_round_trip(fmt, rows):
    t = Table(("a", "b"), rows, "poxe")
    back = parse_table(format_table(t, fmt), fmt)
    assert back.columns == t.columns and back.anchor == "poxe"
    assert len(back.rows) == len(rows)
    for r, s in zip(t.rows, back.rows):
        assert all(_same(x, y) for x, y in zip(r, s))


def test_csv_header_names_anchor():
    text = format_table(Table(("t", "v"), [(0.5, 1.0)], "poxe"))
    assert text.splitlines() == ["t,v,eq=poxe", "0.5,1.0,poxe"]


def test_empty_table_is_header_only():
    assert format_table(Table(("t", "v"), [], "poxe")) == "t,v,eq=poxe\n"
    assert parse_table(format_table(Table(("t", "v"), [], "poxe"), "json"), "json").rows == []


def test_numpy_scalars_are_written_exactly():
    t = Table(("x",), [(np.float64(0.1),), (np.int64(3),)], "lif")
    assert parse_table(format_table(t)).rows == [(0.1,), (3,)]


def test_row_length_is_checked():
    with pytest.raises(ValueError):
        Table(("a", "b"), [(1,)], "x")


def test_unknown_format():
    with pytest.raises(ValueError):
        format_table(Table(("a",), [], "x"), "xml")
    with pytest.raises(ValueError):
        parse_table("a,b\n1,2\n")


def test_emit_and_read(tmp_path):
    t = Table(("t", "v"), [(1.0, math.inf)], "ppo9q")
    for name in ("out.csv", "out.json"):
        text = emit_table(t, "json" if name.endswith("json") else "csv", tmp_path / name)
        assert (tmp_path / name).read_text() == text
        assert read_table(tmp_path / name).rows == t.rows
    assert emit_table(t, "csv", "-") == format_table(t)


def test_write_error_names_path(tmp_path):
    bad = tmp_path / "missing" / "out.csv"
    with pytest.raises(OSError, match="missing"):
        emit_table(Table(("a",), [], "x"), "csv", bad)


def test_anchor_registry_keys():
    assert all("." in k and v for k, v in TABLE_ANCHORS.items())
