# src/verification/domain/services/tally.py
"""Mergeable accumulator behind every record."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


@dataclass
class Tally:
    population: int = 0
    violations: set[str] = field(default_factory=set)
    witnesses: set[str] = field(default_factory=set)
    regular_graphs: set[str] = field(default_factory=set)
    runner_up_value: Optional[Fraction] = None
    runner_up_witnesses: set[str] = field(default_factory=set)

    def offer_runner_up(self, value: Fraction, witness: str) -> None:
        if self.runner_up_value is None or value > self.runner_up_value:
            self.runner_up_value = value
            self.runner_up_witnesses = {witness}
        elif value == self.runner_up_value:
            self.runner_up_witnesses.add(witness)

    def merge(self, other: "Tally") -> "Tally":
        """Fold ``other`` into this tally; associative and order-insensitive."""
        self.population += other.population
        self.violations |= other.violations
        self.witnesses |= other.witnesses
        self.regular_graphs |= other.regular_graphs
        if other.runner_up_value is not None:
            for witness in other.runner_up_witnesses:
                self.offer_runner_up(other.runner_up_value, witness)
        return self
