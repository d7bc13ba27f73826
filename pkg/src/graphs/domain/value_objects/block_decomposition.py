# src/graphs/domain/value_objects/block_decomposition.py
"""Blocks and cut vertices of a connected graph."""

from src.shared.domain.value_objects.base import ValueObject


class BlockDecomposition(ValueObject):
    """Blocks (maximal 2-connected pieces and bridges) plus the cut vertices joining them."""

    def __init__(self, blocks: tuple[frozenset[int], ...], cut_vertices: frozenset[int]):
        self._blocks = tuple(sorted(blocks, key=lambda block: sorted(block)))
        self._cut_vertices = frozenset(cut_vertices)

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        return self._blocks

    @property
    def cut_vertices(self) -> frozenset[int]:
        return self._cut_vertices

    def blocks_containing(self, vertex: int) -> list[frozenset[int]]:
        return [block for block in self._blocks if vertex in block]
