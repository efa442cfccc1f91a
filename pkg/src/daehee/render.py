"""Text renderings of tables, matrices, series and reports.

Grammar shared by every format: rationals print as ``p/q`` (``p`` when the
denominator is 1) and polynomials in the canonical MultiPoly display form.

* CSV: header ``n,k=0,...,k=K`` (``i,j=0,...`` for matrices); a cell is
  double-quoted exactly when it holds a non-constant polynomial.
* JSON: an object with metadata and ``rows``, a list of lists of strings.
* Markdown: a pipe table; non-constant polynomials are wrapped in backticks.
"""
from __future__ import annotations

import json

from .exact import format_rational, parse_rational
from .matrix import SequenceTable, TriMatrix
from .poly import MultiPoly, parse_poly

FORMATS = ("csv", "json", "markdown")


def cell(value) -> str:
    return str(MultiPoly.coerce(value))


def _csv_cell(value) -> str:
    p = MultiPoly.coerce(value)
    return str(p) if p.is_constant() else f'"{p}"'


def _md_cell(value) -> str:
    p = MultiPoly.coerce(value)
    return str(p) if p.is_constant() else f"`{p}`"


def _grid_csv(corner: str, col: str, rows) -> str:
    width = len(rows[0])
    lines = [",".join([corner] + [f"{col}={j}" for j in range(width)])]
    for i, row in enumerate(rows):
        lines.append(",".join([str(i)] + [_csv_cell(v) for v in row]))
    return "\n".join(lines) + "\n"


def _grid_markdown(corner: str, col: str, rows) -> str:
    width = len(rows[0])
    lines = [
        "| " + " | ".join([corner] + [f"{col}={j}" for j in range(width)]) + " |",
        "|" + "---|" * (width + 1),
    ]
    for i, row in enumerate(rows):
        lines.append("| " + " | ".join([str(i)] + [_md_cell(v) for v in row]) + " |")
    return "\n".join(lines) + "\n"


def table_to_dict(table: SequenceTable) -> dict:
    return {
        "family": table.family,
        "n_max": table.n_max,
        "k_max": table.k_max,
        "bindings": {k: format_rational(v) for k, v in table.bindings.items()},
        "rows": [[cell(v) for v in row] for row in table.grid],
    }


def table_from_dict(data: dict) -> SequenceTable:
    table = SequenceTable.from_strings(
        data["family"],
        data["rows"],
        {k: parse_rational(v) for k, v in data.get("bindings", {}).items()},
    )
    if (table.n_max, table.k_max) != (data["n_max"], data["k_max"]):
        raise ValueError("row data does not match the declared n_max/k_max")
    return table


def render_table(table: SequenceTable, fmt: str = "csv") -> str:
    if fmt == "csv":
        return _grid_csv("n", "k", table.grid)
    if fmt == "json":
        return json.dumps(table_to_dict(table), indent=2, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        return _grid_markdown("n", "k", table.grid)
    raise ValueError(f"unknown format {fmt!r}")


def parse_table_json(text: str) -> SequenceTable:
    return table_from_dict(json.loads(text))


def render_matrix(name: str, matrix: TriMatrix, fmt: str = "csv") -> str:
    rows = matrix.dense()
    if fmt == "csv":
        return _grid_csv("i", "j", rows)
    if fmt == "json":
        doc = {"matrix": name, "dim": matrix.dim, "rows": [[cell(v) for v in row] for row in rows]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        return _grid_markdown("i", "j", rows)
    raise ValueError(f"unknown format {fmt!r}")


def parse_matrix_json(text: str) -> TriMatrix:
    data = json.loads(text)
    return TriMatrix([[parse_poly(s) for s in row] for row in data["rows"]])


def render_series(name: str, values, fmt: str = "text") -> str:
    if fmt == "text":
        return "".join(f"{n}: {cell(v)}\n" for n, v in enumerate(values))
    if fmt == "json":
        doc = {"series": name, "order": len(values) - 1, "coefficients": [cell(v) for v in values]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown series format {fmt!r}")


def render_reports(reports, fmt: str = "text") -> str:
    if fmt == "text":
        lines = [r.summary() for r in reports]
        failed = sum(not r.ok for r in reports)
        lines.append(f"{len(reports) - failed}/{len(reports)} reports pass")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = []
        for r in reports:
            w = r.counterexample
            doc.append(
                {
                    "identity": r.identity,
                    "kind": r.kind,
                    "parameters": {k: str(v) for k, v in r.parameters.items()},
                    "instances": len(r.instances),
                    "holding": r.pass_count,
                    "ok": r.ok,
                    "witness": None if w is None else {**{k: str(v) for k, v in w.params.items()}, "detail": w.detail},
                    "note": r.note,
                }
            )
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")

