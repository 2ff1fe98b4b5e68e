import io
import json

import pytest
from hypothesis import given
from strategies import graphs

from localdeg.graph import complete_graph, cycle_graph, empty_graph
from localdeg.io import (
    GraphFormatError,
    graph_to_text,
    parse_graph_file,
    parse_graph_text,
    report_line,
    write_graph_file,
    write_report,
)


def test_graph_to_text_is_exact():
    assert graph_to_text(cycle_graph(3)) == "3 3\n0 1\n0 2\n1 2\n"
    assert graph_to_text(empty_graph(4)) == "4 0\n"


@given(graphs())
def test_text_round_trip(G):
    assert parse_graph_text(graph_to_text(G)) == G


def test_file_round_trip(tmp_path):
    path = tmp_path / "k5.txt"
    write_graph_file(path, complete_graph(5))
    assert path.read_bytes() == graph_to_text(complete_graph(5)).encode("ascii")
    assert parse_graph_file(path) == complete_graph(5)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n1 1\n", 2),  # u = v
        ("3 1\n2 1\n", 2),  # u > v
        ("3 1\n0 3\n", 2),  # out of range
        ("3 2\n0 1\n0 1\n", 3),  # duplicate
        ("3 2\n0 1\n", 1),  # header count mismatch
        ("3 1\n0  1\n", 2),  # double space
        ("3 1\n0 1", 2),  # no final LF
        ("3 1\r\n0 1\r\n", 1),  # CRLF
        ("3 1\n0 01\n", 2),  # leading zero
        ("3 1\n0 x\n", 2),
        ("3\n", 1),
        ("3 1\n0 1\n\n", 1),  # trailing blank line counts as an extra edge line
    ],
)
def test_parser_rejects_malformed_input(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parser_reports_column():
    with pytest.raises(GraphFormatError) as info:
        parse_graph_text("3 1\n0 x\n")
    assert info.value.column == 3


def test_report_lines_keep_key_order_and_utf8():
    rec = {"theorem": "T2.2", "instance": "κ-test", "status": "pass", "witness": None}
    line = report_line(rec)
    assert line == '{"theorem":"T2.2","instance":"κ-test","status":"pass","witness":null}'
    buf = io.StringIO()
    write_report(buf, [rec, rec])
    assert [json.loads(s) for s in buf.getvalue().splitlines()] == [rec, rec]


def test_write_report_to_path(tmp_path):
    path = tmp_path / "r.jsonl"
    write_report(path, [{"a": 1}])
    assert path.read_bytes() == b'{"a":1}\n'
