# src/graphs/domain/services/structure.py
"""Connectivity, block-cut structure and structural classifiers."""

from typing import Iterable

from src.graphs.domain.exceptions import DisconnectedGraphException
from src.graphs.domain.value_objects.block_decomposition import BlockDecomposition
from src.graphs.domain.value_objects.graph import Graph, iter_bits
from src.graphs.domain.value_objects.graph_class import GraphClass
from src.shared.domain.exceptions.base import NotFoundException, ValidationException


def _reachable(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitset of vertices reachable from ``start`` inside the vertex bitset ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adj[v]
        frontier = grown & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (n = 1 counts as connected)."""
    full = (1 << g.n) - 1
    return _reachable(g.adj, 0, full) == full


def is_two_connected(g: Graph) -> bool:
    """Connected, no cut vertex, and at least three vertices."""
    n = g.n
    if n < 3:
        return False
    full = (1 << n) - 1
    if _reachable(g.adj, 0, full) != full:
        return False
    for v in range(n):
        rest = full & ~(1 << v)
        start = 1 if v == 0 else 0
        if _reachable(g.adj, start, rest) != rest:
            return False
    return True


def block_cut_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices by an iterative depth-first low-link traversal, O(n + m)."""
    if not is_connected(g):
        raise DisconnectedGraphException("Block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset())

    disc = [-1] * g.n
    low = [0] * g.n
    disc[0] = low[0] = 0
    clock = 1
    blocks: list[frozenset[int]] = []
    cut_vertices: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    root_children = 0

    # frame: (vertex, parent, neighbor iterator)
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        u, parent, pending = stack[-1]
        descended = False
        for w in pending:
            if disc[w] == -1:
                edge_stack.append((u, w))
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, u, iter(g.neighbors(w))))
                descended = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if descended:
            continue

        stack.pop()
        if not stack:
            break
        p, p_parent, _ = stack[-1]
        low[p] = min(low[p], low[u])
        if low[u] >= disc[p]:
            members: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                members.update((a, b))
                if (a, b) == (p, u):
                    break
            blocks.append(frozenset(members))
            if p_parent == -1:
                root_children += 1
            else:
                cut_vertices.add(p)

    if root_children >= 2:
        cut_vertices.add(0)
    return BlockDecomposition(tuple(blocks), frozenset(cut_vertices))


def classify(g: Graph) -> GraphClass:
    """Cycle iff connected, 2-regular and n >= 3; complete iff every pair is adjacent."""
    n = g.n
    degrees = g.degrees()
    is_complete = all(d == n - 1 for d in degrees)
    is_cycle = n >= 3 and all(d == 2 for d in degrees) and is_connected(g)
    return GraphClass(is_cycle=is_cycle, is_complete=is_complete)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of ``g`` without the edge {u, v}."""
    if not g.has_edge(u, v):
        raise NotFoundException(f"({u}, {v}) is not an edge", u=u, v=v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._unchecked(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of ``g`` with the edge {u, v} added."""
    g.require_vertex(u)
    g.require_vertex(v)
    if u == v:
        raise ValidationException(f"Self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise ValidationException(f"({u}, {v}) is already an edge", u=u, v=v)
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._unchecked(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``; returns it with ``labels[k]`` = original index of vertex k."""
    labels = tuple(sorted(set(vertices)))
    if not labels:
        raise ValidationException("Induced subgraph needs at least one vertex")
    for v in labels:
        g.require_vertex(v)
    position = {v: k for k, v in enumerate(labels)}
    adj = []
    for v in labels:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in position:
                row |= 1 << position[w]
        adj.append(row)
    return Graph._unchecked(len(labels), tuple(adj)), labels
