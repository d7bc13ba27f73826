import pytest

from src.graphs.domain.services.families import (
    bowtie_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    labeled_cycle_count,
    path_graph,
    star_graph,
    torus_graph,
)
from src.graphs.domain.services.structure import is_connected
from src.graphs.domain.value_objects.graph import Graph
from src.shared.domain.exceptions.base import ValidationException


def test_edge_counts():
    assert path_graph(5).edge_count == 4
    assert cycle_graph(5).edge_count == 5
    assert complete_graph(5).edge_count == 10
    assert star_graph(5).edge_count == 4
    assert bowtie_graph().edge_count == 6


def test_hypercube_is_cubic():
    q3 = hypercube_graph(3)
    assert q3.n == 8
    assert q3.edge_count == 12
    assert set(q3.degrees()) == {3}


def test_product_of_edges_is_square():
    square = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert cartesian_product(path_graph(2), path_graph(2)) == square


def test_torus():
    torus = torus_graph(3, 2)
    assert torus.n == 9
    assert torus.edge_count == 18
    assert set(torus.degrees()) == {4}
    assert is_connected(torus)


@pytest.mark.parametrize("n, count", [(3, 1), (4, 3), (5, 12), (6, 60), (7, 360)])
def test_labeled_cycle_count(n, count):
    assert labeled_cycle_count(n) == count


def test_invalid_family_arguments():
    with pytest.raises(ValidationException):
        cycle_graph(2)
    with pytest.raises(ValidationException):
        hypercube_graph(0)
