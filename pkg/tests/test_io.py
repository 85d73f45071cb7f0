import networkx as nx
import pytest
from hypothesis import given

from chromarel import (
    FormatError,
    Graph,
    format_for_path,
    parse_graph,
    serialize_graph,
)
from chromarel.families import complete_graph, cycle_graph, path_graph, petersen

from conftest import graphs


def test_format_for_path():
    assert format_for_path("x.col") == "dimacs"
    assert format_for_path("x.dimacs") == "dimacs"
    assert format_for_path("x.g6") == "graph6"
    assert format_for_path("x.graph6") == "graph6"
    assert format_for_path("x.edgelist") == "edgelist"
    assert format_for_path("x.txt") == "edgelist"
    assert format_for_path("noext") == "edgelist"


def test_unknown_format_rejected():
    with pytest.raises(FormatError):
        parse_graph("", "gml")
    with pytest.raises(FormatError):
        serialize_graph(complete_graph(2), "gml")


def test_dimacs_round_trip():
    g = cycle_graph(5)
    text = serialize_graph(g, "dimacs")
    assert text.splitlines()[0] == "p edge 5 5"
    assert parse_graph(text, "dimacs") == g


def test_dimacs_parses_comments_and_whitespace():
    text = "c a comment\nc another\np edge 3 2\ne 1 2\n\ne 2 3\n"
    g = parse_graph(text, "dimacs")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("e 1 2\n", "problem line"),
        ("p edge 3 1\np edge 3 1\ne 1 2\n", "line 2"),
        ("p edge 3 1\ne 1 1\n", "line 2"),
        ("p edge 3 1\ne 1 4\n", "line 2"),
        ("p edge 3 2\ne 1 2\ne 2 1\n", "line 3"),
        ("p edge 3 2\ne 1 2\n", "declares"),
        ("p edge 3 1\nq 1 2\n", "line 2"),
        ("p col 3 1\ne 1 2\n", "line 1"),
    ],
)
def test_dimacs_errors_name_the_line(text, fragment):
    with pytest.raises(FormatError, match=fragment.replace("(", "").split()[0]):
        parse_graph(text, "dimacs")


# hand-checkable graph6 strings
@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(2), "A_"),
        (complete_graph(3), "Bw"),
        (complete_graph(4), "C~"),
        (path_graph(4), "Ch"),
        (Graph.from_edges(1, []), "@"),
        (Graph.from_edges(0, []), "?"),
    ],
)
def test_graph6_known_strings(g, expected):
    assert serialize_graph(g, "graph6").strip() == expected
    assert parse_graph(expected, "graph6") == g


def test_graph6_header_tolerated():
    assert parse_graph(">>graph6<<Bw", "graph6") == complete_graph(3)


def test_graph6_rejects_bad_input():
    with pytest.raises(FormatError):
        parse_graph("~??", "graph6")  # long form
    with pytest.raises(FormatError):
        parse_graph("B" + chr(30), "graph6")  # byte below range
    with pytest.raises(FormatError):
        parse_graph("B", "graph6")  # truncated
    with pytest.raises(FormatError):
        parse_graph("Bw?", "graph6")  # trailing junk
    with pytest.raises(FormatError):
        serialize_graph(Graph.from_edges(63, []), "graph6")  # needs long form


def test_graph6_padding_must_be_zero():
    # K3 is "Bw"; flipping a padding bit makes the byte invalid
    bad = "B" + chr(ord("w") + 1)
    with pytest.raises(FormatError):
        parse_graph(bad, "graph6")


def test_edgelist_round_trip_and_header():
    g = Graph.from_edges(5, [(0, 4)])
    text = serialize_graph(g, "edgelist")
    assert text.startswith("n=5\n")
    assert parse_graph(text, "edgelist") == g
    # without the header the isolated tail vertex is lost
    assert parse_graph("0 4\n", "edgelist").n == 5


def test_edgelist_comments_and_errors():
    g = parse_graph("# c\nn=3\n0 1 # inline\n", "edgelist")
    assert g.edges() == [(0, 1)]
    with pytest.raises(FormatError):
        parse_graph("0 0\n", "edgelist")
    with pytest.raises(FormatError):
        parse_graph("0 1\n1 0\n", "edgelist")
    with pytest.raises(FormatError):
        parse_graph("-1 2\n", "edgelist")
    with pytest.raises(FormatError):
        parse_graph("n=2\n0 5\n", "edgelist")


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(g):
    mine = serialize_graph(g, "graph6").strip()
    theirs = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert mine == theirs
    assert parse_graph(theirs, "graph6") == g


@given(graphs(max_n=10))
def test_round_trips_all_formats(g):
    for fmt in ("dimacs", "graph6", "edgelist"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_petersen_round_trip():
    g = petersen()
    for fmt in ("dimacs", "graph6", "edgelist"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g
