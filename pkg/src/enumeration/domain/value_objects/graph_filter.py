# src/enumeration/domain/value_objects/graph_filter.py
"""Predicates applied to enumerated or streamed graphs."""

from enum import Enum
from typing import Optional

from src.graphs.domain.services.structure import is_connected, is_two_connected
from src.graphs.domain.value_objects.graph import Graph
from src.shared.domain.exceptions.base import ValidationException
from src.shared.domain.value_objects.base import ValueObject


class Connectivity(str, Enum):
    ANY = "any"
    CONNECTED = "connected"
    TWO_CONNECTED = "two_connected"


class GraphFilter(ValueObject):
    """Connectivity requirement plus optional edge-count and degree bounds."""

    def __init__(
        self,
        connectivity: Connectivity | str = Connectivity.ANY,
        min_edges: Optional[int] = None,
        max_edges: Optional[int] = None,
        min_degree: Optional[int] = None,
        max_degree: Optional[int] = None,
    ):
        if isinstance(connectivity, str):
            try:
                connectivity = Connectivity(connectivity.lower().replace("-", "_"))
            except ValueError:
                raise ValidationException(f"Invalid connectivity filter: {connectivity}")
        for name, bound in (("min_edges", min_edges), ("max_edges", max_edges),
                            ("min_degree", min_degree), ("max_degree", max_degree)):
            if bound is not None and bound < 0:
                raise ValidationException(f"{name} cannot be negative")
        self.connectivity = connectivity
        self.min_edges = min_edges
        self.max_edges = max_edges
        self.min_degree = min_degree
        self.max_degree = max_degree

    @classmethod
    def connected(cls) -> "GraphFilter":
        return cls(Connectivity.CONNECTED)

    @classmethod
    def two_connected(cls) -> "GraphFilter":
        return cls(Connectivity.TWO_CONNECTED)

    def accepts(self, g: Graph) -> bool:
        if self.min_edges is not None or self.max_edges is not None:
            m = g.edge_count
            if self.min_edges is not None and m < self.min_edges:
                return False
            if self.max_edges is not None and m > self.max_edges:
                return False
        if self.min_degree is not None or self.max_degree is not None:
            degrees = g.degrees()
            if self.min_degree is not None and min(degrees) < self.min_degree:
                return False
            if self.max_degree is not None and max(degrees) > self.max_degree:
                return False
        if self.connectivity is Connectivity.CONNECTED:
            return is_connected(g)
        if self.connectivity is Connectivity.TWO_CONNECTED:
            return is_two_connected(g)
        return True
