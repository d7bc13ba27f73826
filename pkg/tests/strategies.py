# tests/strategies.py
"""Hypothesis strategies shared by the unit tests."""

from fractions import Fraction

from hypothesis import strategies as st

from src.graphs.domain.value_objects.graph import Graph, edge_pairs


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)}
    pairs = edge_pairs(n)
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))
    return Graph.from_edges(n, edges)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
nonzero_rationals = rationals.filter(lambda value: value != Fraction(0))
