"""Text and JSON forms of diagrams.

Text form::

    rows 2 cols 2 toprow 0
    2 1
    2 3

Each token is an integer, a fraction ``p/q`` or ``-`` for zero.  JSON form:
``{"toprow": 0, "table": [["2", "1"], ["2", "3"]]}``.  Writers always emit
fractions in lowest terms and ``-`` for zero, so parse/format round trips are
exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .diagram import BettiDiagram

__all__ = ["format_text", "parse_text", "format_json", "parse_json", "parse_diagram", "format_value"]


def format_value(v: Fraction) -> str:
    if v == 0:
        return "-"
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _parse_value(tok) -> Fraction:
    if isinstance(tok, int) and not isinstance(tok, bool):
        return Fraction(tok)
    if not isinstance(tok, str):
        raise ValueError(f"bad table entry {tok!r}")
    tok = tok.strip()
    if tok in ("-", "", "."):
        return Fraction(0)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad table entry {tok!r}") from None


def _grid(d: BettiDiagram, toprow: int | None) -> tuple[int, list[list[str]]]:
    top, table = d.to_table(toprow)
    return top, [[format_value(v) for v in row] for row in table]


def format_text(d: BettiDiagram, toprow: int | None = None) -> str:
    top, grid = _grid(d, toprow)
    cols = len(grid[0]) if grid else 0
    width = max((len(tok) for row in grid for tok in row), default=1)
    lines = [f"rows {len(grid)} cols {cols} toprow {top}"]
    lines += [" ".join(tok.rjust(width) for tok in row) for row in grid]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> BettiDiagram:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty diagram text")
    head = lines[0].split()
    if len(head) != 6 or head[0::2] != ["rows", "cols", "toprow"]:
        raise ValueError(f"expected header 'rows R cols C toprow T', got {lines[0]!r}")
    try:
        nrows, ncols, top = int(head[1]), int(head[3]), int(head[5])
    except ValueError:
        raise ValueError(f"non-integer header field in {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != nrows:
        raise ValueError(f"header promises {nrows} rows, found {len(body)}")
    entries = {}
    for r, line in enumerate(body):
        toks = line.split()
        if len(toks) != ncols:
            raise ValueError(f"row {top + r} has {len(toks)} entries, expected {ncols}")
        for i, tok in enumerate(toks):
            entries[(i, top + r)] = _parse_value(tok)
    return BettiDiagram(entries)


def format_json(d: BettiDiagram, toprow: int | None = None) -> str:
    top, grid = _grid(d, toprow)
    return json.dumps({"toprow": top, "table": grid}, separators=(",", ":"))


def diagram_from_json(obj: dict) -> BettiDiagram:
    if not isinstance(obj, dict) or "table" not in obj:
        raise ValueError("JSON diagram needs a 'table' key")
    top = int(obj.get("toprow", 0))
    entries = {}
    for r, row in enumerate(obj["table"]):
        for i, tok in enumerate(row):
            entries[(i, top + r)] = _parse_value(tok)
    return BettiDiagram(entries)


def parse_json(text: str) -> BettiDiagram:
    return diagram_from_json(json.loads(text))


def parse_diagram(text: str) -> BettiDiagram:
    """Either form, sniffed from the first non-blank character."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)
