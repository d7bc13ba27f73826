# src/graphs/domain/services/families.py
"""Named graph families."""

from math import factorial

from src.graphs.domain.value_objects.graph import Graph, iter_bits
from src.shared.domain.exceptions.base import ValidationException


def path_graph(n: int) -> Graph:
    """P_n: 0 - 1 - ... - (n-1)."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """C_n labeled 0..n-1 around the cycle."""
    if n < 3:
        raise ValidationException(f"A cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._unchecked(n, tuple(full & ~(1 << i) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 2: {0,1,2} and {2,3,4}."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """g □ h with vertex (a, b) numbered a * h.n + b."""
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            here = a * h.n + b
            edges.extend((here, a * h.n + c) for c in iter_bits(h.adj[b]) if c > b)
            edges.extend((here, c * h.n + b) for c in iter_bits(g.adj[a]) if c > a)
    return Graph.from_edges(g.n * h.n, edges)


def hypercube_graph(d: int) -> Graph:
    """Q_d: vertices are d-bit words, adjacent when they differ in one bit."""
    if d < 1:
        raise ValidationException(f"Hypercube dimension must be positive, got {d}")
    size = 1 << d
    return Graph.from_edges(size, ((v, v ^ (1 << k)) for v in range(size) for k in range(d) if v < v ^ (1 << k)))


def torus_graph(n: int, d: int) -> Graph:
    """Discrete torus C_{n,d}: the d-fold Cartesian power of C_n."""
    if d < 1:
        raise ValidationException(f"Torus dimension must be positive, got {d}")
    ring = cycle_graph(n)
    torus = ring
    for _ in range(d - 1):
        torus = cartesian_product(torus, ring)
    return torus


def labeled_cycle_count(n: int) -> int:
    """Number of distinct labeled n-cycles on n vertices, n!/(2n)."""
    if n < 3:
        return 0
    return factorial(n) // (2 * n)
