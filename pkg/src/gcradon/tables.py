"""Tabular output shared by the command line tools.

A :class:`Table` is a list of rows under fixed column names, labelled with
the anchor of the formula that produced it.  CSV files carry the anchor in a
last header cell ``eq=<anchor>`` (and repeat it in every row); JSON files
carry it as a field.  Floats are written as their shortest round-trip repr so
that both formats read back to the same values and types.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["TABLE_ANCHORS", "Table", "emit_table", "format_table", "parse_table", "read_table"]

# anchor of each table kind, keyed by "<subcommand>.<action>"
TABLE_ANCHORS = {
    "specfun.gegenbauer": "kioxsru",
    "specfun.chebyshev": "kioxsru",
    "specfun.funk-hecke": "shap30",
    "specfun.mellin-alpha": "89zse",
    "specfun.mellin-beta": "89zse1",
    "specfun.constant": "gynko",
    "frac.apply": "lif",
    "frac.apply-ek": "lifa2",
    "frac.derivative": "78awqe",
    "gc.apply": "4gt6a",
    "gc.kernel-demo": "89srg",
    "gc.invert": "mlpzx",
    "radon.forward": "poxe",
    "radon.dual": "ppo9q",
    "radon.invert": "recon65",
    "radon.oracle": "rtra1",
    "radon.kernel-demo": "azw1a2",
    "radon.support-scan": "azw1a2R",
    "radon.duality-check": "duas3",
    "spheremean.forward": "Corma",
    "spheremean.path-check": "CormaQ",
    "spheremean.kernel-demo": "zaehQuin",
    "spheremean.support-scan": "zaehQusu",
    "funk.forward": "Con22on",
    "funk.path-check": "Con22on22",
    "funk.kernel-demo": "786NGR1SP",
    "funk.support-scan": "SPHSup",
    "slice.forward": "Sliceint1",
    "slice.path-check": "stereoviatS",
    "slice.kernel-demo": "zasliep",
    "slice.support-scan": "zasli",
    "hyperbolic.forward": "3.1-HYP",
    "hyperbolic.path-check": "3.14-HYP",
    "hyperbolic.kernel-demo": "786NGR1",
    "hyperbolic.support-scan": "786NGR",
    "maps.check": "viat",
    "maps.roundtrip": "mmqAAWS",
}

_NONFINITE = {"nan": math.nan, "inf": math.inf, "-inf": -math.inf}


@dataclass(frozen=True)
class Table:
    """Rows of values under ``columns``, produced by the formula ``anchor``."""

    columns: tuple
    rows: list = field(default_factory=list)
    anchor: str = ""

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        rows = [tuple(r) for r in self.rows]
        for r in rows:
            if len(r) != len(self.columns):
                raise ValueError(f"row {r!r} does not match columns {self.columns}")
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        if isinstance(v, int):
            return str(v)
        return repr(float(v)) if math.isfinite(v) else _cell_nonfinite(v)
    if hasattr(v, "dtype"):
        return _cell(v.item())
    return str(v)


def _cell_nonfinite(v: float) -> str:
    return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")


def _json_value(v) -> str:
    if hasattr(v, "dtype"):
        v = v.item()
    if isinstance(v, float):
        return repr(float(v)) if math.isfinite(v) else json.dumps(_cell_nonfinite(v))
    return json.dumps(v)


def format_table(table: Table, fmt: str = "csv") -> str:
    """Serialize ``table`` as CSV or JSON text."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*table.columns, f"eq={table.anchor}"])
        for r in table.rows:
            w.writerow([*(_cell(v) for v in r), table.anchor])
        return buf.getvalue()
    if fmt == "json":
        rows = ",\n".join("    [" + ", ".join(_json_value(v) for v in r) + "]" for r in table.rows)
        body = f"[\n{rows}\n  ]" if table.rows else "[]"
        return (
            "{\n"
            f'  "anchor": {json.dumps(table.anchor)},\n'
            f'  "columns": {json.dumps(list(table.columns))},\n'
            f'  "rows": {body}\n'
            "}\n"
        )
    raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def emit_table(table: Table, fmt: str = "csv", path=None) -> str:
    """Write ``table`` to ``path`` (``None`` or ``"-"`` returns the text only)."""
    text = format_table(table, fmt)
    if path not in (None, "-"):
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return text


def _parse_cell(s: str):
    if s in _NONFINITE:
        return _NONFINITE[s]
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def parse_table(text: str, fmt: str = "csv") -> Table:
    """Inverse of :func:`format_table`."""
    if fmt == "csv":
        reader = list(csv.reader(io.StringIO(text)))
        if not reader or not reader[0][-1].startswith("eq="):
            raise ValueError("CSV header must end with an eq=<anchor> cell")
        header = reader[0]
        rows = [tuple(_parse_cell(c) for c in r[:-1]) for r in reader[1:] if r]
        return Table(tuple(header[:-1]), rows, header[-1][3:])
    if fmt == "json":
        data = json.loads(text)
        rows = [tuple(_NONFINITE.get(v, v) if isinstance(v, str) else v for v in r) for r in data["rows"]]
        return Table(tuple(data["columns"]), rows, data["anchor"])
    raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def read_table(path, fmt: str | None = None) -> Table:
    """Read a table written by :func:`emit_table`; the format follows the suffix by default."""
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "csv")
    return parse_table(path.read_text(), fmt)
