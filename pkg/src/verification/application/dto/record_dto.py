# src/verification/application/dto/record_dto.py
"""Verification DTOs."""

from typing import List, Optional

from pydantic import Field

from src.shared.application.dto.base import Rational, ResponseDTO
from src.verification.domain.value_objects.verification_record import PopulationSource, VerificationRecord


class VerificationRecordDTO(ResponseDTO):
    """One NDJSON record; graph6 lists are sorted, rationals are "p/q"."""
    theorem_id: str
    n: int = Field(..., ge=1)
    population: int = Field(..., ge=0, description="Graphs (or constructions) checked")
    population_source: PopulationSource
    violations: List[str] = Field(default_factory=list)
    equality_witnesses: List[str] = Field(default_factory=list)
    extremal_value: Optional[Rational] = None
    runner_up_value: Optional[Rational] = None
    runner_up_witnesses: List[str] = Field(default_factory=list)
    regular_graphs: List[str] = Field(default_factory=list, description="Resistance-regular graphs seen, where listed")
    passed: bool
    elapsed_seconds: float = Field(..., ge=0)

    @classmethod
    def from_record(cls, record: VerificationRecord) -> "VerificationRecordDTO":
        return cls(
            theorem_id=record.theorem_id,
            n=record.n,
            population=record.population,
            population_source=record.population_source,
            violations=list(record.violations),
            equality_witnesses=list(record.equality_witnesses),
            extremal_value=record.extremal_value,
            runner_up_value=record.runner_up_value,
            runner_up_witnesses=list(record.runner_up_witnesses),
            regular_graphs=list(record.regular_graphs),
            passed=record.passed,
            elapsed_seconds=round(record.elapsed, 6),
        )

    def to_json(self, include_timing: bool = True) -> str:
        """NDJSON line; without timing two runs over the same input are byte-identical."""
        if include_timing:
            return self.model_dump_json()
        return self.model_dump_json(exclude={"elapsed_seconds"})
