import json

import pytest

from src.graphs.domain.exceptions import DisconnectedGraphException
from src.graphs.domain.services.families import cycle_graph, path_graph
from src.graphs.domain.value_objects.graph import Graph
from src.graphs.infrastructure.codecs.graph6 import parse_graph6
from src.resistance.application.services.analysis_application_service import AnalysisApplicationService
from src.shared.domain.exceptions.base import BusinessRuleException


@pytest.fixture()
def service(settings):
    return AnalysisApplicationService(settings)


def test_triangle_document(service):
    document = json.loads(service.analyze_graph(parse_graph6("Bw")).to_json())
    assert document["graph6"] == "Bw"
    assert document["n"] == 3
    assert document["kirchhoff_index"] == "2/1"
    assert document["constant_curvature"] == "3/4"
    assert document["resistance_regular"] is True
    assert document["resistance_matrix"][0] == ["0/1", "2/3", "2/3"]


def test_path_document(service):
    document = json.loads(service.analyze_graph(parse_graph6("Bg")).to_json())
    assert document["resistance_regular"] is False
    assert document["constant_curvature"] is None
    assert document["eccentricities"] == ["3/1", "2/1", "3/1"]
    assert document["curvature"] == ["1/2", "0/1", "1/2"]


def test_analyze_all_preserves_order(service):
    documents = list(service.analyze_all([cycle_graph(4), path_graph(2)]))
    assert [d.n for d in documents] == [4, 2]


def test_preconditions(service):
    with pytest.raises(DisconnectedGraphException):
        service.analyze_graph(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(BusinessRuleException):
        service.analyze_graph(Graph(1, [0]))


def test_closed_forms_document(service):
    document = json.loads(service.closed_forms(4).to_json())
    assert document["cycle"]["pair_resistances"] == ["0/1", "3/4", "1/1"]
    assert document["cycle"]["kirchhoff_index"] == "5/1"
    assert document["complete"]["curvature"] == "2/3"
    assert json.loads(service.closed_forms(2).to_json())["cycle"] is None
