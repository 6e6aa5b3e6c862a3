"""
Text and JSON formats for SMAN adjacency matrices.

Text format:

    sman <k> <n>
    <n space-separated 0/1 digits>     (k lines)

JSON format: ``{"k":4,"n":6,"rows":[[1,1,1,0,0,0],...]}``.
Parsing reports the 1-based line of the first problem.
"""

import json
import re
from typing import Any, Dict, List, Tuple

from ..errors import ParseError, UsageError
from .network import Sman

_HEADER = re.compile(r'^sman\s+(\d+)\s+(\d+)$')
_BINARY_ROW = re.compile(r'^[01](?:\s+[01])*$')


def parse_header(line: str, keyword: str, pattern: "re.Pattern") -> Tuple[int, ...]:
    """Match a ``<keyword> <int> ...`` header on line 1."""
    match = pattern.match(line.strip())
    if not match:
        raise ParseError(f"expected header '{keyword} ...', got {line.strip()!r}", 1)
    return tuple(int(group) for group in match.groups())


def json_integer(data: Dict[str, Any], key: str) -> int:
    """The integer under ``key`` of a JSON object; booleans are not integers here."""
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{key} must be an integer, got {value!r}", 1)
    return value


def content_lines(text: str) -> List[str]:
    """Lines of ``text`` with trailing blank lines dropped."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)
    return lines


def parse_sman(text: str) -> Sman:
    """
    Parse the text format.

    Args:
        text: File contents

    Returns:
        The parsed SMAN

    Raises:
        ParseError: On a bad header, a row of the wrong length or alphabet,
            a missing row, or trailing content
    """
    lines = content_lines(text)
    k, n = parse_header(lines[0], "sman", _HEADER)
    rows = []
    for index in range(k):
        line_number = index + 2
        if line_number > len(lines):
            raise ParseError(f"expected {k} rows, found {len(rows)}", line_number)
        line = lines[index + 1].strip()
        if not _BINARY_ROW.match(line):
            raise ParseError(f"row must be space-separated 0/1 digits, got {line!r}", line_number)
        digits = [int(token) for token in line.split()]
        if len(digits) != n:
            raise ParseError(f"row has {len(digits)} entries, expected {n}", line_number)
        rows.append(digits)
    if len(lines) > k + 1:
        raise ParseError("unexpected content after the last row", k + 2)
    try:
        sman = Sman.from_rows(rows)
    except UsageError as e:
        raise ParseError(str(e), 1) from e
    if (sman.k, sman.n) != (k, n):
        raise ParseError(f"header declares {k}x{n}, rows give {sman.k}x{sman.n}", 1)
    return sman


def serialize_sman(s: Sman) -> str:
    """Canonical text form; ``parse_sman`` inverts it exactly."""
    lines = [f"sman {s.k} {s.n}"]
    lines.extend(" ".join(str(bit) for bit in row) for row in s.to_rows())
    return "\n".join(lines) + "\n"


def sman_to_dict(s: Sman) -> Dict[str, Any]:
    return {"k": s.k, "n": s.n, "rows": s.to_rows()}


def sman_to_json(s: Sman) -> str:
    return json.dumps(sman_to_dict(s), separators=(",", ":"))


def sman_from_json(text: str) -> Sman:
    """
    Parse the JSON mirror of the text format.

    Raises:
        ParseError: On invalid JSON, missing or extra keys, or bad rows
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from e
    if not isinstance(data, dict) or set(data) != {"k", "n", "rows"}:
        raise ParseError("expected an object with exactly the keys k, n, rows", 1)
    k, n = json_integer(data, "k"), json_integer(data, "n")
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ParseError("rows must be a list of 0/1 lists", 1)
    for row in rows:
        for value in row:
            if isinstance(value, bool) or not isinstance(value, int) or value not in (0, 1):
                raise ParseError(f"entry {value!r} is not 0 or 1", 1)
    try:
        sman = Sman.from_rows(rows)
    except UsageError as e:
        raise ParseError(str(e), 1) from e
    if (sman.k, sman.n) != (k, n):
        raise ParseError(f"declared {k}x{n}, rows give {sman.k}x{sman.n}", 1)
    return sman


def load_sman(text: str) -> Sman:
    """Parse either format, picking JSON when the text starts with '{'."""
    if text.lstrip().startswith("{"):
        return sman_from_json(text)
    return parse_sman(text)
