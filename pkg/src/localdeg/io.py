"""Edge-list files and JSON-lines reports.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` with
``u < v``, single spaces, LF endings, no trailing blank line.
"""

from __future__ import annotations

import json
import os
from collections.abc import Iterable

from .graph import Graph, from_edge_list


class GraphFormatError(ValueError):
    """Malformed edge-list text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _parse_ints(text: str, lineno: int, count: int) -> list[int]:
    if text != text.strip() or "  " in text or "\t" in text:
        raise GraphFormatError("fields must be separated by a single space", lineno)
    fields = text.split(" ")
    if len(fields) != count:
        raise GraphFormatError(f"expected {count} fields, found {len(fields)}", lineno)
    out = []
    col = 1
    for f in fields:
        if not f.isdigit() or not f.isascii():
            raise GraphFormatError(f"not a non-negative decimal integer: {f!r}", lineno, col)
        if len(f) > 1 and f[0] == "0":
            raise GraphFormatError(f"leading zero in {f!r}", lineno, col)
        out.append(int(f))
        col += len(f) + 1
    return out


def parse_graph_text(text: str) -> Graph:
    if "\r" in text:
        raise GraphFormatError("CR characters are not allowed; use LF line endings", 1)
    if not text.endswith("\n"):
        raise GraphFormatError("missing final LF", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    n, m = _parse_ints(lines[0], 1, 2)
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges but {len(lines) - 1} edge lines follow", 1, len(str(n)) + 2)
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if line == "":
            raise GraphFormatError("blank line", lineno)
        u, v = _parse_ints(line, lineno, 2)
        if u >= v:
            raise GraphFormatError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno)
        if v >= n:
            raise GraphFormatError(f"vertex {v} out of range for n={n}", lineno, len(str(u)) + 2)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
    return from_edge_list(n, seen)


def graph_to_text(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph_file(path: str | os.PathLike) -> Graph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise GraphFormatError("file is not ASCII", raw[: exc.start].count(b"\n") + 1) from None
    return parse_graph_text(text)


def write_graph_file(path: str | os.PathLike, G: Graph) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(graph_to_text(G))


# -- reports ------------------------------------------------------------------


def report_line(record: dict) -> str:
    """One JSON object per line, keys in the order given, no whitespace padding."""
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def write_report(path_or_file, records: Iterable[dict]) -> None:
    if hasattr(path_or_file, "write"):
        for rec in records:
            path_or_file.write(report_line(rec) + "\n")
        return
    with open(path_or_file, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(report_line(rec) + "\n")
