# src/enumeration/domain/services/enumerator.py
"""Exhaustive labeled-graph enumeration by edge bitmask."""

from typing import Iterator, Optional

from src.config import DEFAULT_ENUMERATION_CAP
from src.enumeration.domain.exceptions import EnumerationCapException
from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.graphs.domain.value_objects.graph import Graph, edge_pairs


def mask_count(n: int) -> int:
    """2^(n(n-1)/2): number of labeled simple graphs on n vertices."""
    return 1 << len(edge_pairs(n))


def check_cap(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> None:
    if not 1 <= n <= cap:
        raise EnumerationCapException(n, cap)


def enumerate_range(n: int, start: int, stop: int, graph_filter: Optional[GraphFilter] = None) -> Iterator[Graph]:
    """Graphs for masks start..stop-1 that pass the filter, in mask order."""
    for mask in range(start, stop):
        graph = Graph.from_edge_mask(n, mask)
        if graph_filter is None or graph_filter.accepts(graph):
            yield graph


def enumerate_labeled(
    n: int,
    graph_filter: Optional[GraphFilter] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Graph]:
    """Every labeled graph on n vertices passing the filter, once each, in edge-bitmask order.

    Bit k of the mask is the k-th pair of the column-major upper triangle, the
    graph6 bit order.
    """
    check_cap(n, cap)
    return enumerate_range(n, 0, mask_count(n), graph_filter)


def chunk_ranges(n: int, chunks: int) -> list[tuple[int, int]]:
    """Split the mask range of order n into ``chunks`` contiguous, ordered pieces."""
    total = mask_count(n)
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    ranges = []
    start = 0
    for k in range(chunks):
        stop = start + step + (1 if k < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges
