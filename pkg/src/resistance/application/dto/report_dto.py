# src/resistance/application/dto/report_dto.py
"""Resistance DTOs."""

from typing import List, Optional

from pydantic import Field

from src.graphs.domain.value_objects.graph import Graph
from src.graphs.infrastructure.codecs.graph6 import encode_graph6
from src.resistance.domain.value_objects.closed_forms import CompleteClosedForms, CycleClosedForms
from src.resistance.domain.value_objects.resistance_report import ResistanceReport
from src.shared.application.dto.base import BaseDTO, Rational, ResponseDTO


class ResistanceReportDTO(ResponseDTO):
    """JSON document for one analyzed graph; rationals travel as "p/q" strings."""
    graph6: str = Field(..., description="Input graph in graph6")
    n: int = Field(..., ge=2)
    resistance_matrix: List[List[Rational]]
    eccentricities: List[Rational]
    kirchhoff_index: Rational
    curvature: List[Rational]
    resistance_regular: bool
    constant_curvature: Optional[Rational] = None

    @classmethod
    def from_report(cls, graph: Graph, report: ResistanceReport) -> "ResistanceReportDTO":
        return cls(
            graph6=encode_graph6(graph),
            n=report.n,
            resistance_matrix=report.r.to_rows(),
            eccentricities=list(report.ecc),
            kirchhoff_index=report.kf,
            curvature=list(report.kappa),
            resistance_regular=report.resistance_regular,
            constant_curvature=report.constant_curvature,
        )


class CycleFormsDTO(BaseDTO):
    pair_resistances: List[Rational] = Field(..., description="Index d holds the resistance at graph distance d")
    eccentricity: Rational
    kirchhoff_index: Rational
    curvature: Rational

    @classmethod
    def from_forms(cls, forms: CycleClosedForms) -> "CycleFormsDTO":
        return cls(
            pair_resistances=[forms.pair_resistance(d) for d in range(forms.n // 2 + 1)],
            eccentricity=forms.ecc,
            kirchhoff_index=forms.kf,
            curvature=forms.kappa,
        )


class CompleteFormsDTO(BaseDTO):
    pair_resistance: Rational
    kirchhoff_index: Rational
    curvature: Rational

    @classmethod
    def from_forms(cls, forms: CompleteClosedForms) -> "CompleteFormsDTO":
        return cls(pair_resistance=forms.pair_resistance, kirchhoff_index=forms.kf, curvature=forms.kappa)


class ClosedFormsDTO(ResponseDTO):
    """Closed forms at one order; ``cycle`` is absent below n = 3."""
    n: int = Field(..., ge=2)
    cycle: Optional[CycleFormsDTO] = None
    complete: CompleteFormsDTO
