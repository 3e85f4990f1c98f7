"""Text formats: a native line-oriented encoding plus OR-Library ingestion.

Native format: header line "n m", then one line per set, "cardinality
elements..." with 0-based ascending elements.  Round-trips exactly.
"""

from __future__ import annotations

import warnings

from .core import ElementSet, Instance


class ParseError(ValueError):
    """Malformed instance text.  ``line`` is 1-based when known, else None."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)
        self.line = line


def serialize_instance(instance: Instance) -> str:
    out = [f"{instance.n} {instance.m}"]
    for s in instance.sets:
        out.append(" ".join([str(len(s))] + [str(e) for e in s.elements()]))
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Instance:
    """Inverse of serialize_instance; tolerant of extra whitespace and blank
    lines, strict about counts, ranges, and duplicates."""
    numbered = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    numbered = [(ln, toks) for ln, toks in numbered if toks]
    if not numbered:
        raise ParseError("empty input")
    ln, header = numbered[0]
    if len(header) != 2:
        raise ParseError("malformed header: expected 'n m'", ln)
    n = _int_token(header[0], ln)
    m = _int_token(header[1], ln)
    if n < 1 or m < 1:
        raise ParseError(f"malformed header: n and m must be positive, got {n} {m}", ln)
    body = numbered[1:]
    if len(body) < m:
        last = numbered[-1][0]
        raise ParseError(f"truncated set list: expected {m} set lines, found {len(body)}", last)
    if len(body) > m:
        raise ParseError("trailing content", body[m][0])
    sets = []
    for ln, toks in body:
        card = _int_token(toks[0], ln)
        if card < 0:
            raise ParseError(f"negative cardinality {card}", ln)
        if len(toks) - 1 < card:
            raise ParseError(
                f"truncated set list: expected {card} elements, found {len(toks) - 1}", ln
            )
        if len(toks) - 1 > card:
            raise ParseError(
                f"expected {card} elements, found {len(toks) - 1}", ln
            )
        bits = 0
        for tok in toks[1:]:
            e = _int_token(tok, ln)
            if not 0 <= e < n:
                raise ParseError(f"element {e} out of range", ln)
            if (bits >> e) & 1:
                raise ParseError(f"duplicate element {e}", ln)
            bits |= 1 << e
        sets.append(ElementSet(bits, n))
    return Instance(n, tuple(sets))


def _int_token(tok: str, line: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"invalid integer {tok!r}", line) from None


def parse_orlib_scp(text: str) -> Instance:
    """Read an OR-Library set-covering file as a unicost instance.

    Layout: "rows columns", then one cost per column, then per row a count
    followed by that many 1-based column indices.  Rows become elements and
    columns become sets (so the row lists are transposed); costs are dropped,
    with a warning when any differs from 1.  Token stream only; the format
    wraps lines arbitrarily, so errors carry no line numbers.
    """
    tokens = text.split()
    pos = 0

    def take(what: str) -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"truncated file: expected {what}")
        tok = tokens[pos]
        pos += 1
        try:
            return int(tok, 10)
        except ValueError:
            raise ParseError(f"invalid integer {tok!r} for {what}") from None

    rows = take("row count")
    cols = take("column count")
    if rows < 1:
        raise ParseError("zero rows")
    if cols < 1:
        raise ParseError("zero columns")
    nonunit = False
    for c in range(cols):
        nonunit |= take(f"cost of column {c + 1}") != 1
    if nonunit:
        warnings.warn("non-unit column costs dropped (unicost interpretation)")
    masks = [0] * cols
    for r in range(rows):
        covers = take(f"cover count of row {r + 1}")
        if covers < 0:
            raise ParseError(f"negative cover count for row {r + 1}")
        for _ in range(covers):
            c = take(f"covering column of row {r + 1}")
            if not 1 <= c <= cols:
                raise ParseError(f"column index {c} out of range 1..{cols} in row {r + 1}")
            masks[c - 1] |= 1 << r
    if pos != len(tokens):
        raise ParseError(f"trailing tokens after row sections ({len(tokens) - pos} left)")
    return Instance(rows, tuple(ElementSet(b, rows) for b in masks))
