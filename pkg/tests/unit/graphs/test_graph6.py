import networkx as nx
import pytest

from src.enumeration.domain.services.enumerator import enumerate_labeled
from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.graphs.domain.exceptions import Graph6ParseException, UnsupportedFormatException
from src.graphs.domain.services.families import complete_graph, path_graph
from src.graphs.domain.value_objects.graph import Graph
from src.graphs.infrastructure.codecs.graph6 import encode_graph6, parse_graph6
from tests.oracles import to_networkx


def test_parse_triangle():
    assert parse_graph6("Bw") == complete_graph(3)


def test_parse_path_centered_at_one():
    g = parse_graph6("Bg")
    assert g.edges() == [(0, 1), (1, 2)]


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1
    assert g.edge_count == 0
    assert encode_graph6(g) == "@"


def test_header_and_newline_tolerated():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)
    assert parse_graph6(b"Bw\r\n") == complete_graph(3)


@pytest.mark.parametrize("text", [":Bw", "&Bw"])
def test_sparse6_and_digraph6_rejected(text):
    with pytest.raises(UnsupportedFormatException):
        parse_graph6(text)


def test_character_outside_range_reports_offset():
    with pytest.raises(Graph6ParseException) as exc_info:
        parse_graph6("B w")
    assert exc_info.value.offset == 1


def test_non_ascii_reports_offset():
    with pytest.raises(Graph6ParseException) as exc_info:
        parse_graph6("Bé")
    assert exc_info.value.offset == 1


def test_wrong_byte_count():
    with pytest.raises(Graph6ParseException, match="Expected 1 edge bytes"):
        parse_graph6("Bww")
    with pytest.raises(Graph6ParseException):
        parse_graph6("C")


def test_nonzero_padding_rejected():
    # 'x' = 57 = 0b111001: the last padding bit is set
    with pytest.raises(Graph6ParseException, match="padding") as exc_info:
        parse_graph6("Bx")
    assert exc_info.value.offset == 1


def test_empty_rejected():
    with pytest.raises(Graph6ParseException):
        parse_graph6("")


def test_at_line_keeps_offset():
    error = Graph6ParseException("Nonzero padding bits", 1).at_line(7)
    assert error.line == 7
    assert error.offset == 1
    assert "line 7" in error.message


@pytest.mark.parametrize("n", [4, 5])
def test_matches_networkx_bytes_for_every_graph(n):
    for g in enumerate_labeled(n):
        expected = nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
        assert encode_graph6(g) == expected
        assert parse_graph6(expected) == g


def test_long_order_header_round_trip():
    g = path_graph(100)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
    assert parse_graph6(text) == g


def test_decoding_agrees_with_networkx():
    g = Graph.from_edges(7, [(0, 3), (3, 6), (1, 2), (2, 5), (4, 6), (0, 6)])
    decoded = nx.from_graph6_bytes(encode_graph6(g).encode())
    assert sorted(tuple(sorted(e)) for e in decoded.edges()) == g.edges()


def test_at_line_keeps_subclass():
    error = UnsupportedFormatException("sparse6 is not supported", 0).at_line(4)
    assert type(error) is UnsupportedFormatException
    assert error.line == 4


@pytest.mark.slow
def test_round_trip_on_every_connected_graph_up_to_seven(connected_6):
    for g in connected_6:
        assert encode_graph6(g) == nx.to_graph6_bytes(to_networkx(g), header=False).strip().decode()
    for g in enumerate_labeled(7, GraphFilter.connected()):
        assert parse_graph6(encode_graph6(g)) == g
