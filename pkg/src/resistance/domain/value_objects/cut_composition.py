# src/resistance/domain/value_objects/cut_composition.py
"""Result of gluing two resistance matrices at a shared cut vertex."""

from src.numerics.domain.value_objects.matrix import Matrix
from src.shared.domain.value_objects.base import ValueObject


class CutComposition(ValueObject):
    """``matrix`` is over the union vertex set: H1 keeps indices 0..n1-1, H2's other vertices follow.

    ``vertex_map[v]`` is the union index of H2's vertex ``v`` (its cut vertex maps onto H1's).
    """

    def __init__(self, matrix: Matrix, vertex_map: tuple[int, ...]):
        self.matrix = matrix
        self.vertex_map = tuple(vertex_map)
