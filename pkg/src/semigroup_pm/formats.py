"""Matrix file formats: plain text and JSON, bit-exact round trips.

Text format: one row per line, space-separated signed decimal integers.
Blank lines are ignored and '#' starts a comment that runs to end of line.
JSON format: {"n": <size>, "rows": [[...], ...]} for a square matrix.
"""

from __future__ import annotations

import json

from .linalg import IntMatrix

__all__ = [
    "parse_matrix_text",
    "format_matrix_text",
    "parse_matrix_json",
    "format_matrix_json",
    "parse_matrix",
    "format_matrix",
]


def parse_matrix_text(text: str) -> IntMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            rows.append([int(tok) for tok in body.split()])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: not an integer row: {line!r}") from exc
    if not rows:
        raise ValueError("no matrix rows found")
    return IntMatrix.from_rows(rows)


def format_matrix_text(M: IntMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in M.rows) + "\n"


def parse_matrix_json(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('JSON matrix must be an object with "n" and "rows"')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError('"rows" must be a list of lists of integers')
    M = IntMatrix.from_rows(rows)
    n = obj.get("n")
    if n is not None and (M.n_rows != n or M.n_cols != n):
        raise ValueError(f'"n" is {n} but rows describe a {M.n_rows}x{M.n_cols} matrix')
    return M


def format_matrix_json(M: IntMatrix) -> str:
    return json.dumps({"n": M.n_rows, "rows": [list(row) for row in M.rows]})


def parse_matrix(text: str, fmt: str) -> IntMatrix:
    if fmt == "json":
        return parse_matrix_json(text)
    if fmt == "text":
        return parse_matrix_text(text)
    raise ValueError(f"unknown matrix format {fmt!r}")


def format_matrix(M: IntMatrix, fmt: str) -> str:
    if fmt == "json":
        return format_matrix_json(M)
    if fmt == "text":
        return format_matrix_text(M)
    raise ValueError(f"unknown matrix format {fmt!r}")
