# src/resistance/domain/services/recursion.py
"""Resistance updates that avoid a full solve: edge restoration and gluing at cut vertices."""

from src.graphs.domain.exceptions import DisconnectedGraphException
from src.graphs.domain.services.structure import block_cut_decomposition, induced_subgraph, is_connected
from src.graphs.domain.value_objects.graph import Graph
from src.numerics.domain.value_objects.matrix import Matrix, NumberDomain
from src.resistance.domain.services.resistance_engine import resistance_matrix
from src.resistance.domain.value_objects.cut_composition import CutComposition
from src.shared.domain.exceptions.base import NotFoundException, ValidationException


def deletion_update(r_prime: Matrix, i: int, j: int) -> Matrix:
    """Resistance matrix of G from that of G' = G - {i, j}.

    Omega_G(p, q) = Omega'(p, q)
        - [Omega'(p, i) + Omega'(q, j) - Omega'(p, j) - Omega'(q, i)]^2 / (4 [1 + Omega'(i, j)])

    The diagonal is written as 0 directly.
    """
    if not r_prime.is_square:
        raise ValidationException(f"Expected a square resistance matrix, got {r_prime.rows}x{r_prime.cols}")
    n = r_prime.rows
    if not (0 <= i < n and 0 <= j < n):
        raise NotFoundException(f"Edge ({i}, {j}) has a vertex outside 0..{n - 1}", i=i, j=j)
    if i == j:
        raise ValidationException("Restored edge must join two distinct vertices")

    om = r_prime
    zero = om.domain.zero
    denominator = 4 * (1 + om[i, j])
    entries = []
    for p in range(n):
        for q in range(n):
            if p == q:
                entries.append(zero)
                continue
            bracket = om[p, i] + om[q, j] - om[p, j] - om[q, i]
            entries.append(om[p, q] - bracket * bracket / denominator)
    return Matrix(n, n, entries, om.domain)


def compose_across_cut(r1: Matrix, r2: Matrix, x1: int, x2: int) -> CutComposition:
    """Glue H1 and H2 by identifying x1 with x2.

    Pairs inside one side keep their resistance; a pair (u in H1, v in H2)
    gets Omega_H1(u, x) + Omega_H2(x, v).
    """
    if r1.domain is not r2.domain:
        raise ValidationException("Cannot glue matrices from different number domains")
    n1, n2 = r1.rows, r2.rows
    if not 0 <= x1 < n1:
        raise NotFoundException(f"Cut vertex {x1} outside H1 (0..{n1 - 1})", vertex=x1)
    if not 0 <= x2 < n2:
        raise NotFoundException(f"Cut vertex {x2} outside H2 (0..{n2 - 1})", vertex=x2)

    vertex_map = []
    next_index = n1
    for v in range(n2):
        if v == x2:
            vertex_map.append(x1)
        else:
            vertex_map.append(next_index)
            next_index += 1

    size = n1 + n2 - 1
    # owner[k] = (side, local index) of union vertex k; the cut vertex counts as H1's
    owner = [(1, u) for u in range(n1)] + [None] * (n2 - 1)
    for v, k in enumerate(vertex_map):
        if v != x2:
            owner[k] = (2, v)

    def between(a: tuple[int, int], b: tuple[int, int]):
        side_a, u = a
        side_b, v = b
        if side_a == 1 and side_b == 1:
            return r1[u, v]
        if side_a == 2 and side_b == 2:
            return r2[u, v]
        if side_a == 1:
            return r1[u, x1] + r2[x2, v]
        return r2[u, x2] + r1[x1, v]

    entries = (between(owner[a], owner[b]) for a in range(size) for b in range(size))
    return CutComposition(Matrix(size, size, entries, r1.domain), tuple(vertex_map))


def block_accelerated_resistance(g: Graph, domain: NumberDomain = NumberDomain.EXACT) -> Matrix:
    """Same result as :func:`resistance_matrix`, solving each block separately and gluing along the block-cut tree."""
    if not is_connected(g):
        raise DisconnectedGraphException("Resistance distances need a connected graph")
    blocks = list(block_cut_decomposition(g).blocks)

    solved = {}
    for block in blocks:
        subgraph, labels = induced_subgraph(g, block)
        solved[block] = (resistance_matrix(subgraph, domain), labels)

    start = next(block for block in blocks if 0 in block)
    current, labels = solved[start]
    labels = list(labels)
    covered = set(start)
    pending = [block for block in blocks if block != start]

    while pending:
        for block in pending:
            shared = block & covered
            if shared:
                break
        else:
            raise DisconnectedGraphException("Block-cut tree is disconnected")
        (x,) = shared
        block_matrix, block_labels = solved[block]
        composition = compose_across_cut(current, block_matrix, labels.index(x), block_labels.index(x))
        labels.extend([-1] * (len(block_labels) - 1))
        for local, target in enumerate(composition.vertex_map):
            labels[target] = block_labels[local]
        current = composition.matrix
        covered |= block
        pending.remove(block)

    position = {vertex: k for k, vertex in enumerate(labels)}
    n = g.n
    return Matrix(n, n, (current[position[i], position[j]] for i in range(n) for j in range(n)), domain)
