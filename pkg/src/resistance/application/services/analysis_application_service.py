# src/resistance/application/services/analysis_application_service.py
"""Analysis application service."""

from typing import Iterable, Iterator, Optional

import structlog

from src.config import Settings, get_settings
from src.graphs.domain.exceptions import DisconnectedGraphException
from src.graphs.domain.services.structure import is_connected
from src.graphs.domain.value_objects.graph import Graph
from src.resistance.application.dto.report_dto import (
    ClosedFormsDTO,
    CompleteFormsDTO,
    CycleFormsDTO,
    ResistanceReportDTO,
)
from src.resistance.domain.services.closed_forms import complete_closed_forms, cycle_closed_forms
from src.resistance.domain.services.resistance_engine import analyze
from src.shared.domain.exceptions.base import BusinessRuleException

logger = structlog.get_logger()


class AnalysisApplicationService:
    """Turns parsed graphs into report documents."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def analyze_graph(self, graph: Graph) -> ResistanceReportDTO:
        if not is_connected(graph):
            raise DisconnectedGraphException(f"Graph on {graph.n} vertices is not connected")
        if graph.n < 2:
            raise BusinessRuleException("Analysis needs at least two vertices")
        report = analyze(graph)
        logger.debug(
            "Graph analyzed",
            n=graph.n,
            edges=graph.edge_count,
            resistance_regular=report.resistance_regular,
        )
        return ResistanceReportDTO.from_report(graph, report)

    def analyze_all(self, graphs: Iterable[Graph]) -> Iterator[ResistanceReportDTO]:
        count = 0
        for graph in graphs:
            yield self.analyze_graph(graph)
            count += 1
        logger.info("Analysis finished", graphs=count)

    def closed_forms(self, n: int) -> ClosedFormsDTO:
        cycle = CycleFormsDTO.from_forms(cycle_closed_forms(n)) if n >= 3 else None
        return ClosedFormsDTO(n=n, cycle=cycle, complete=CompleteFormsDTO.from_forms(complete_closed_forms(n)))
