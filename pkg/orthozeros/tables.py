"""
CSV and JSON layouts for zeros and error estimates.

Every real is written with seventeen significant digits in a fixed exponent form,
so that reading a file back and writing it out again reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import TYPE_CHECKING

from orthozeros.settings import CSV_FLOAT_FORMAT

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from orthozeros.records import OutputRecord
    from orthozeros.verify import ErrorRow

type Cell = float | None


def format_real(value: Cell) -> str:
    if value is None:
        return ""
    return format(value, CSV_FLOAT_FORMAT)


def parse_real(text: str) -> Cell:
    if text == "":
        return None
    return float(text)


def _render(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def zeros_csv(record: OutputRecord) -> str:
    """Single-family layout: one row per zero, headed k,zero."""
    rows = [
        [str(k), format_real(zero)] for k, zero in enumerate(record.zeros, start=1)
    ]
    return _render(["k", "zero"], rows)


def _json_value(value: object) -> str:
    if isinstance(value, float):
        return format_real(value) if math.isfinite(value) else "null"
    return json.dumps(value)


def record_json(record: OutputRecord) -> str:
    """The record as a JSON object, with reals written as in the CSV layouts."""
    fields = []
    for name, value in record.model_dump().items():
        if isinstance(value, list) and value:
            items = ",\n".join(f"    {_json_value(item)}" for item in value)
            text = f"[\n{items}\n  ]"
        else:
            text = "[]" if isinstance(value, list) else _json_value(value)
        fields.append(f"  {json.dumps(name)}: {text}")
    return "{\n" + ",\n".join(fields) + "\n}\n"


def zero_table_csv(
    degree: int, columns: Mapping[str, Sequence[float] | None]
) -> str:
    """
    Multi-family layout: one column per family label.

    A family that failed to solve is given as None and leaves its cells empty.
    """
    rows = []
    for k in range(degree):
        cells = [str(k + 1)]
        for zeros in columns.values():
            cells.append("" if zeros is None else format_real(zeros[k]))
        rows.append(cells)
    return _render(["k", *columns], rows)


ERROR_TABLE_HEADER = ("polynomial", "degree", "error_estimate", "exact_error")


def error_table_csv(rows: Sequence[ErrorRow]) -> str:
    return _render(
        ERROR_TABLE_HEADER,
        [
            [
                row.family_label,
                str(row.degree),
                format_real(row.error_estimate),
                format_real(row.exact_error),
            ]
            for row in rows
        ],
    )


def read_table(text: str) -> tuple[list[str], list[list[str]]]:
    """Split CSV text into its header and data rows."""
    reader = csv.reader(io.StringIO(text))
    header, *rows = list(reader)
    return header, rows


def reformat_table(text: str, real_columns: Sequence[int]) -> str:
    """Parse the real-valued columns of a table and serialize it again."""
    header, rows = read_table(text)
    rewritten = []
    for row in rows:
        cells = list(row)
        for column in real_columns:
            cells[column] = format_real(parse_real(cells[column]))
        rewritten.append(cells)
    return _render(header, rewritten)
