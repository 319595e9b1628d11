"""Reading configurations from JSON or CSV with line-precise errors."""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path

from orchard.errors import ParseError
from orchard.geometry import Configuration

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_RATIONAL = re.compile(r"^[+-]?\d+\s*/\s*[+-]?\d+$")


def parse_scalar(text: str, line=None) -> Fraction:
    """Exact value of an integer, decimal, or ``p/q`` string."""
    s = text.strip()
    if _NUMBER.match(s):
        return Fraction(s)
    if _RATIONAL.match(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}", line)
        return Fraction(int(num), int(den))
    raise ParseError(f"not a number: {text!r}", line)


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _point_positions(text: str) -> list[int]:
    """Character offsets of the elements of the top-level ``points`` array."""
    m = re.search(r'"points"\s*:\s*\[', text)
    if m is None:
        return []
    decoder = json.JSONDecoder()
    positions = []
    pos = m.end()
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return positions
        positions.append(pos)
        try:
            _, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError:
            return positions


def _check_distinct(points, lines) -> None:
    seen = {}
    for k, p in enumerate(points):
        if p in seen:
            j = seen[p]
            raise ParseError(f"point {k} repeats point {j} (line {lines[j]})", lines[k])
        seen[p] = k


def parse_json(text: str) -> Configuration:
    try:
        doc = json.loads(text, parse_float=str, parse_int=int)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or "dimension" not in doc or "points" not in doc:
        raise ParseError('expected an object with "dimension" and "points"', 1)
    d = doc["dimension"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ParseError(f"dimension must be a positive integer, got {d!r}", 1)
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise ParseError('"points" must be a non-empty list', 1)
    positions = _point_positions(text)
    lines = [_line_of(text, positions[k]) if k < len(positions) else None for k in range(len(raw))]
    points = []
    for k, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != d:
            raise ParseError(f"point {k} must be a list of {d} coordinates", lines[k])
        coords = []
        for c in p:
            if isinstance(c, bool) or not isinstance(c, (int, str)):
                raise ParseError(f"point {k}: invalid coordinate {c!r}", lines[k])
            coords.append(Fraction(c) if isinstance(c, int) else parse_scalar(c, lines[k]))
        points.append(tuple(coords))
    _check_distinct(points, lines)
    return Configuration(d, tuple(points))


def parse_csv(text: str) -> Configuration:
    """One point per row; a first row with no numeric field is a header."""
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        fields = [f.strip() for f in row]
        if not any(fields):
            continue
        rows.append((lineno, fields))
    if rows:
        first_line, first = rows[0]
        if not any(_NUMBER.match(f) or _RATIONAL.match(f) for f in first):
            rows = rows[1:]
    if not rows:
        raise ParseError("no points found", 1)
    d = len(rows[0][1])
    points, lines = [], []
    for lineno, fields in rows:
        if len(fields) != d:
            raise ParseError(f"expected {d} columns, got {len(fields)}", lineno)
        points.append(tuple(parse_scalar(f, lineno) for f in fields))
        lines.append(lineno)
    _check_distinct(points, lines)
    return Configuration(d, tuple(points))


def load_configuration(path) -> Configuration:
    """Parse by extension: ``.csv`` as CSV, everything else as JSON."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix.lower() == ".csv":
        return parse_csv(text)
    return parse_json(text)


def format_scalar(x: Fraction) -> str | int:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump_json(config: Configuration) -> str:
    pts = [[format_scalar(c) for c in p] for p in config.points]
    return json.dumps({"dimension": config.dimension, "points": pts})
