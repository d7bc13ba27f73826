# src/enumeration/infrastructure/graph6_stream.py
"""Ingestion of graph6 streams produced by external generators."""

from typing import Iterable, Iterator, Optional

import structlog

from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.graphs.domain.exceptions import Graph6ParseException
from src.graphs.domain.value_objects.graph import Graph
from src.graphs.infrastructure.codecs.graph6 import parse_graph6

logger = structlog.get_logger()


def stream_graph6(
    source: Iterable[str | bytes],
    graph_filter: Optional[GraphFilter] = None,
    strict: bool = False,
) -> Iterator[Graph]:
    """Parsed, filtered graphs in input order.

    Blank lines are ignored. A malformed line raises (annotated with its line
    number) when ``strict``, otherwise it is logged and skipped.
    """
    for number, line in enumerate(source, start=1):
        if not line.strip():
            continue
        try:
            graph = parse_graph6(line.strip())
        except Graph6ParseException as exc:
            located = exc.at_line(number)
            if strict:
                raise located from exc
            logger.warning("Skipping malformed graph6 line", line=number, offset=exc.offset, reason=located.message)
            continue
        if graph_filter is None or graph_filter.accepts(graph):
            yield graph
