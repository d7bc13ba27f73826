# src/graphs/infrastructure/codecs/edge_list.py
"""Plain edge-list format: first line n, then one "u v" pair per line."""

from src.graphs.domain.exceptions import EdgeListParseException
from src.graphs.domain.value_objects.graph import Graph


def _to_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListParseException(f"Non-numeric token {token!r}", line) from None


def parse_edge_list(text: str) -> Graph:
    """Parse an edge list. Blank lines are skipped and duplicate edges collapse."""
    lines = [(number, raw.strip()) for number, raw in enumerate(text.splitlines(), start=1)]
    lines = [(number, content) for number, content in lines if content]
    if not lines:
        raise EdgeListParseException("Missing vertex count", 1)

    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) != 1:
        raise EdgeListParseException("First line must hold only the vertex count", header_line)
    n = _to_int(tokens[0], header_line)
    if n < 1:
        raise EdgeListParseException(f"Vertex count must be positive, got {n}", header_line)

    adj = [0] * n
    for number, content in lines[1:]:
        tokens = content.split()
        if len(tokens) != 2:
            raise EdgeListParseException(f"Expected 'u v', got {content!r}", number)
        u, v = (_to_int(token, number) for token in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseException(f"Vertex index out of range 0..{n - 1} in ({u}, {v})", number)
        if u == v:
            raise EdgeListParseException(f"Self-loop at vertex {u}", number)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._unchecked(n, tuple(adj))


def encode_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
