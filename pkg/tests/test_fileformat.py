from __future__ import annotations

import pytest

from palette_index.coloring import EdgeColoring
from palette_index.fileformat import (FormatError, parse_coloring, parse_graph,
                                      serialize_coloring, serialize_graph)
from palette_index.graph import gen_grid


def test_parse_graph_k3():
    g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g.vertex_count == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))


def test_parse_graph_comments_and_blanks():
    g = parse_graph("# a triangle\n\np 3 3\ne 1 2\n# middle\ne 2 3\ne 1 3\n")
    assert g.edge_count == 3


def test_graph_roundtrip_grid():
    g = gen_grid(3, 3)
    text = serialize_graph(g)
    assert serialize_graph(parse_graph(text)) == text
    assert parse_graph(text) == g  # parse after serialize is the identity


def test_parse_graph_range_error_carries_line():
    with pytest.raises(FormatError, match="line 2"):
        parse_graph("p 2 1\ne 1 3\n")


def test_parse_graph_header_errors():
    with pytest.raises(FormatError, match="line 1"):
        parse_graph("q 2 1\ne 1 2\n")
    with pytest.raises(FormatError, match="missing header"):
        parse_graph("# nothing\n")


def test_parse_graph_count_mismatch():
    with pytest.raises(FormatError, match="promises 2 edges"):
        parse_graph("p 3 2\ne 1 2\n")


def test_parse_graph_rejects_loop():
    with pytest.raises(FormatError, match="loop"):
        parse_graph("p 2 1\ne 2 2\n")


def test_coloring_roundtrip():
    c = EdgeColoring({0: 1, 1: 2, 2: 1})
    text = serialize_coloring(c, 3)
    parsed, header = parse_coloring(text)
    assert parsed.color_of == c.color_of
    assert header == (2, 3)


def test_parse_coloring_tolerates_summary_line():
    text = "s 2 3\nc 1 1\nc 2 2\npalettes=3 bound=3 theorem=grid\n"
    parsed, _ = parse_coloring(text)
    assert parsed.color_of == {0: 1, 1: 2}


def test_parse_coloring_duplicate_edge():
    with pytest.raises(FormatError, match="colored twice"):
        parse_coloring("s 1 1\nc 1 1\nc 1 2\n")


def test_parse_coloring_rejects_nonpositive_color():
    with pytest.raises(FormatError, match="positive"):
        parse_coloring("s 1 1\nc 1 0\n")
