"""
Text and JSON formats for encoding matrices.

Text format:

    code <k> <n> <p>
    <n integers in [0, p)>     (k lines)

JSON mirror: ``{"k":..,"n":..,"p":..,"rows":[[..],..]}``.
"""

import json
import re
from typing import Any, Dict

from ..errors import ParseError, UsageError
from ..gf.field import FieldPrime
from ..gf.matrix import FieldMatrix
from ..sman.parser import content_lines, json_integer, parse_header
from .code import EncodingMatrix

_HEADER = re.compile(r'^code\s+(\d+)\s+(\d+)\s+(\d+)$')
_INTEGER_ROW = re.compile(r'^\d+(?:\s+\d+)*$')


def _build(p: int, rows, line: int) -> EncodingMatrix:
    try:
        field = FieldPrime(p)
        return EncodingMatrix.from_matrix(FieldMatrix.from_rows(field, rows))
    except UsageError as e:
        raise ParseError(str(e), line) from e


def parse_code(text: str) -> EncodingMatrix:
    """
    Parse the text format.

    Raises:
        ParseError: On a bad header, malformed rows, entries outside [0, p),
            a non-prime p, or a matrix of rank below k
    """
    lines = content_lines(text)
    k, n, p = parse_header(lines[0], "code", _HEADER)
    rows = []
    for index in range(k):
        line_number = index + 2
        if line_number > len(lines):
            raise ParseError(f"expected {k} rows, found {len(rows)}", line_number)
        line = lines[index + 1].strip()
        if not _INTEGER_ROW.match(line):
            raise ParseError(f"row must be space-separated integers, got {line!r}", line_number)
        values = [int(token) for token in line.split()]
        if len(values) != n:
            raise ParseError(f"row has {len(values)} entries, expected {n}", line_number)
        for value in values:
            if value >= p:
                raise ParseError(f"entry {value} outside [0, {p})", line_number)
        rows.append(values)
    if len(lines) > k + 1:
        raise ParseError("unexpected content after the last row", k + 2)
    if k == 0:
        raise ParseError("a code needs at least one row", 1)
    return _build(p, rows, 1)


def serialize_code(g: EncodingMatrix) -> str:
    """Canonical text form; ``parse_code`` inverts it exactly."""
    lines = [f"code {g.k} {g.n} {g.field.p}"]
    lines.extend(" ".join(str(value) for value in row) for row in g.matrix.to_rows())
    return "\n".join(lines) + "\n"


def code_to_dict(g: EncodingMatrix) -> Dict[str, Any]:
    return {"k": g.k, "n": g.n, "p": g.field.p, "rows": g.matrix.to_rows()}


def code_to_json(g: EncodingMatrix) -> str:
    return json.dumps(code_to_dict(g), separators=(",", ":"))


def code_from_json(text: str) -> EncodingMatrix:
    """
    Parse the JSON mirror.

    Raises:
        ParseError: On invalid JSON, wrong keys, or an invalid matrix
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from e
    if not isinstance(data, dict) or set(data) != {"k", "n", "p", "rows"}:
        raise ParseError("expected an object with exactly the keys k, n, p, rows", 1)
    k, n, p = (json_integer(data, key) for key in ("k", "n", "p"))
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ParseError("rows must be a list of integer lists", 1)
    for row in rows:
        for value in row:
            if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < p:
                raise ParseError(f"entry {value!r} outside [0, {p})", 1)
    g = _build(p, rows, 1)
    if (g.k, g.n) != (k, n):
        raise ParseError(f"declared {k}x{n}, rows give {g.k}x{g.n}", 1)
    return g


def load_code(text: str) -> EncodingMatrix:
    """Parse either format, picking JSON when the text starts with '{'."""
    if text.lstrip().startswith("{"):
        return code_from_json(text)
    return parse_code(text)
