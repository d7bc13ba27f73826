# src/verification/domain/value_objects/verification_record.py
"""Outcome of one checked statement over one population of graphs."""

from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

from src.shared.domain.value_objects.base import ValueObject


class PopulationSource(str, Enum):
    ENUMERATION = "enumeration"
    STREAM = "stream"
    CONSTRUCTION = "construction"


class VerificationRecord(ValueObject):
    """Counts, witnesses and violations (graph6 strings, sorted) for one statement at one order."""

    def __init__(
        self,
        theorem_id: str,
        n: int,
        population: int,
        population_source: PopulationSource,
        violations: Iterable[str],
        equality_witnesses: Iterable[str],
        extremal_value: Optional[Fraction],
        elapsed: float,
        runner_up_value: Optional[Fraction] = None,
        runner_up_witnesses: Iterable[str] = (),
        regular_graphs: Iterable[str] = (),
    ):
        self.theorem_id = theorem_id
        self.n = n
        self.population = population
        self.population_source = population_source
        self.violations = tuple(sorted(set(violations)))
        self.equality_witnesses = tuple(sorted(set(equality_witnesses)))
        self.extremal_value = extremal_value
        self.elapsed = elapsed
        self.runner_up_value = runner_up_value
        self.runner_up_witnesses = tuple(sorted(set(runner_up_witnesses)))
        self.regular_graphs = tuple(sorted(set(regular_graphs)))

    @property
    def passed(self) -> bool:
        return not self.violations

    def _key(self) -> tuple:
        # wall time is not part of a record's identity
        return tuple(value for name, value in self.__dict__.items() if name != "elapsed")
