# src/graphs/domain/value_objects/graph.py
"""Simple undirected graph on vertices 0..n-1, stored as adjacency bitsets."""

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from src.shared.domain.exceptions.base import NotFoundException, ValidationException
from src.shared.domain.value_objects.base import ValueObject


@lru_cache(maxsize=64)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...

    This is the graph6 bit order and the bit order of edge masks.
    """
    return tuple((i, j) for j in range(1, n) for i in range(j))


def iter_bits(row: int) -> Iterator[int]:
    """Indices of the set bits of ``row``, ascending."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


class Graph(ValueObject):
    """Immutable simple undirected graph.

    ``adj[i]`` is an int whose bit ``j`` is set iff ``{i, j}`` is an edge. Python
    ints are arbitrary precision, so rows stay a single word up to n = 64 and
    grow as needed beyond that.
    """

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 1:
            raise ValidationException(f"Graph needs at least one vertex, got n={n}")
        if len(adj) != n:
            raise ValidationException(f"Expected {n} adjacency rows, got {len(adj)}")

        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise ValidationException(f"Adjacency row {i} references a vertex outside 0..{n - 1}")
            if (row >> i) & 1:
                raise ValidationException(f"Self-loop at vertex {i}")
            for j in iter_bits(row):
                if not (adj[j] >> i) & 1:
                    raise ValidationException(f"Adjacency is not symmetric for pair ({i}, {j})")

        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Hot path for enumeration; callers guarantee the invariants.
        graph = cls.__new__(cls)
        graph._n = n
        graph._adj = adj
        return graph

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge iterable; duplicates collapse."""
        if n < 1:
            raise ValidationException(f"Graph needs at least one vertex, got n={n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationException(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationException(f"Self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._unchecked(n, tuple(adj))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build from a bitmask over :func:`edge_pairs` (bit k = k-th pair)."""
        adj = [0] * n
        for i, j in edge_pairs(n):
            if mask & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            mask >>= 1
            if not mask:
                break
        return cls._unchecked(n, tuple(adj))

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def has_vertex(self, u: int) -> bool:
        return 0 <= u < self._n

    def require_vertex(self, u: int) -> None:
        if not self.has_vertex(u):
            raise NotFoundException(f"Vertex {u} out of range 0..{self._n - 1}", vertex=u)

    def has_edge(self, u: int, v: int) -> bool:
        return self.has_vertex(u) and self.has_vertex(v) and bool((self._adj[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self._adj[u]))

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i < j, in :func:`edge_pairs` order."""
        return [(i, j) for i, j in edge_pairs(self._n) if (self._adj[i] >> j) & 1]

    def edge_mask(self) -> int:
        mask = 0
        for k, (i, j) in enumerate(edge_pairs(self._n)):
            if (self._adj[i] >> j) & 1:
                mask |= 1 << k
        return mask

    def _key(self) -> tuple:
        return (self._n, self._adj)

    def __getstate__(self) -> tuple:
        return (self._n, self._adj)

    def __setstate__(self, state: tuple) -> None:
        self._n, self._adj = state

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"
