import pytest

from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.enumeration.infrastructure.graph6_stream import stream_graph6
from src.graphs.domain.exceptions import Graph6ParseException, UnsupportedFormatException
from src.graphs.infrastructure.codecs.graph6 import encode_graph6


def test_blank_lines_skipped():
    graphs = list(stream_graph6(["Bw\n", "\n", "Bg\n"]))
    assert [encode_graph6(g) for g in graphs] == ["Bw", "Bg"]


def test_filter_applied():
    graphs = list(stream_graph6(["Bw", "Bg", "BW"], GraphFilter.two_connected()))
    assert [encode_graph6(g) for g in graphs] == ["Bw"]


def test_malformed_line_skipped_when_lenient():
    graphs = list(stream_graph6(["Bw", "Bx", "Bg"]))
    assert len(graphs) == 2


def test_malformed_line_raises_with_line_number_when_strict():
    with pytest.raises(Graph6ParseException) as exc_info:
        list(stream_graph6(["Bw", "", "Bx"], strict=True))
    assert exc_info.value.line == 3
    assert exc_info.value.offset == 1


def test_bytes_lines():
    assert len(list(stream_graph6([b"Bw\n", b"Bg\n"]))) == 2


@pytest.mark.parametrize("line", [":Bw", "&Bw"])
def test_strict_keeps_unsupported_format_type(line):
    with pytest.raises(UnsupportedFormatException) as exc_info:
        list(stream_graph6(["Bw", line], strict=True))
    assert exc_info.value.line == 2
