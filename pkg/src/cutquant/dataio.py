"""File formats: two-column CSV tables, deterministic JSON and CSV output.

JSON emission is byte-deterministic: keys keep insertion order, floats
are always printed with 17 significant digits so identical inputs give
identical bytes on every platform.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

__all__ = [
    "read_two_column_csv",
    "format_float",
    "dumps_stable",
    "csv_text",
]


def read_two_column_csv(path) -> tuple[np.ndarray, np.ndarray]:
    """Read (abscissa, value) rows; an optional single header row is skipped.

    Abscissae must be strictly increasing and all entries finite.
    """
    rows: list[tuple[float, float]] = []
    with open(Path(path), newline="") as handle:
        reader = csv.reader(handle)
        for index, row in enumerate(reader):
            cells = [cell.strip() for cell in row if cell.strip() != ""]
            if not cells:
                continue
            if len(cells) != 2:
                raise ValueError(f"{path}: row {index + 1} must have exactly two columns")
            try:
                pair = (float(cells[0]), float(cells[1]))
            except ValueError:
                if index == 0:
                    continue  # header row
                raise ValueError(f"{path}: row {index + 1} is not numeric") from None
            rows.append(pair)
    if len(rows) < 2:
        raise ValueError(f"{path}: need at least two data rows")
    abscissae = np.array([r[0] for r in rows])
    values = np.array([r[1] for r in rows])
    if not np.all(np.isfinite(abscissae)) or not np.all(np.isfinite(values)):
        raise ValueError(f"{path}: entries must be finite")
    if not np.all(np.diff(abscissae) > 0.0):
        raise ValueError(f"{path}: abscissae must be strictly increasing")
    return abscissae, values


def format_float(x: float) -> str:
    """17-significant-digit decimal form; round-trips any finite double."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return f"{x:.17g}"


def _emit(obj, pieces: list[str], indent: int, level: int) -> None:
    pad = " " * (indent * level)
    inner = " " * (indent * (level + 1))
    if isinstance(obj, dict):
        if not obj:
            pieces.append("{}")
            return
        pieces.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON keys must be strings, got {key!r}")
            pieces.append(f"{inner}{json.dumps(key)}: ")
            _emit(value, pieces, indent, level + 1)
            pieces.append(",\n" if i < len(obj) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        items = list(obj)
        if not items:
            pieces.append("[]")
            return
        pieces.append("[\n")
        for i, value in enumerate(items):
            pieces.append(inner)
            _emit(value, pieces, indent, level + 1)
            pieces.append(",\n" if i < len(items) - 1 else "\n")
        pieces.append(pad + "]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        pieces.append("true" if obj else "false")
    elif obj is None:
        pieces.append("null")
    elif isinstance(obj, (int, np.integer)):
        pieces.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        pieces.append(format_float(float(obj)))
    elif isinstance(obj, str):
        pieces.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")


def dumps_stable(obj, indent: int = 2) -> str:
    """Deterministic JSON text (insertion-ordered keys, fixed float format)."""
    pieces: list[str] = []
    _emit(obj, pieces, indent, 0)
    pieces.append("\n")
    return "".join(pieces)


def csv_text(header: list[str], rows: list[list]) -> str:
    """RFC-quoted CSV with a header row; floats through format_float."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [
                ""
                if cell is None
                else format_float(cell)
                if isinstance(cell, (float, np.floating, int, np.integer))
                and not isinstance(cell, bool)
                else str(cell)
                for cell in row
            ]
        )
    return buffer.getvalue()
