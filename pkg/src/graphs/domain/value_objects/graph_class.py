# src/graphs/domain/value_objects/graph_class.py
"""Structural classification used to identify equality cases."""

from src.shared.domain.value_objects.base import ValueObject


class GraphClass(ValueObject):
    """Whether a graph is a cycle C_n and/or a complete graph K_n (K_3 is both)."""

    def __init__(self, is_cycle: bool, is_complete: bool):
        self.is_cycle = is_cycle
        self.is_complete = is_complete
