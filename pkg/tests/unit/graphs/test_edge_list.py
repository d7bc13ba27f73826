import pytest

from src.graphs.domain.exceptions import EdgeListParseException
from src.graphs.domain.services.families import path_graph
from src.graphs.infrastructure.codecs.edge_list import encode_edge_list, parse_edge_list


def test_parse_path():
    assert parse_edge_list("3\n0 1\n1 2\n") == path_graph(3)


def test_blank_lines_and_duplicates():
    assert parse_edge_list("\n3\n\n0 1\n1 0\n1 2\n\n") == path_graph(3)


def test_encode_is_parseable():
    g = path_graph(4)
    assert encode_edge_list(g) == "4\n0 1\n1 2\n2 3\n"
    assert parse_edge_list(encode_edge_list(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("three\n", 1),
        ("3 4\n", 1),
        ("0\n", 1),
        ("3\n0 x\n", 2),
        ("3\n0 1\n0 3\n", 3),
        ("3\n1 1\n", 2),
        ("3\n0 1 2\n", 2),
    ],
)
def test_errors_carry_line_number(text, line):
    with pytest.raises(EdgeListParseException) as exc_info:
        parse_edge_list(text)
    assert exc_info.value.line == line
