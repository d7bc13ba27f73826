# src/graphs/infrastructure/codecs/graph6.py
"""graph6 reader and writer (bit layout of McKay's formats.txt)."""

from src.graphs.domain.exceptions import Graph6ParseException, UnsupportedFormatException
from src.graphs.domain.value_objects.graph import Graph, edge_pairs

HEADER = ">>graph6<<"
_BIAS = 63
_MAX_BYTE = 126


def _decode_order(data: bytes) -> tuple[int, int]:
    """Decode N(n); returns (n, index of the first edge byte)."""
    if not data:
        raise Graph6ParseException("Empty graph6 string", 0)
    if data[0] != _MAX_BYTE:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == _MAX_BYTE:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6ParseException("Truncated length header", len(data))
    n = 0
    for byte in data[start:start + width]:
        n = (n << 6) | (byte - _BIAS)
    return n, start + width


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _BIAS])
    if n <= 258047:
        return bytes([_MAX_BYTE] + [((n >> shift) & 63) + _BIAS for shift in (12, 6, 0)])
    return bytes([_MAX_BYTE, _MAX_BYTE] + [((n >> shift) & 63) + _BIAS for shift in (30, 24, 18, 12, 6, 0)])


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 line (optional ``>>graph6<<`` header, trailing newline tolerated)."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6ParseException("Non-ASCII character", exc.start) from exc
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data[:1] == b":":
        raise UnsupportedFormatException("sparse6 input is not supported, convert to graph6", 0)
    if data[:1] == b"&":
        raise UnsupportedFormatException("digraph6 input is not supported, only undirected graph6", 0)

    for offset, byte in enumerate(data):
        if not _BIAS <= byte <= _MAX_BYTE:
            raise Graph6ParseException(f"Character {byte!r} outside 63..126", offset)

    n, body = _decode_order(data)
    if n < 1:
        raise Graph6ParseException("graph6 encodes an empty vertex set", 0)

    pairs = edge_pairs(n)
    expected = (len(pairs) + 5) // 6
    actual = len(data) - body
    if actual != expected:
        raise Graph6ParseException(
            f"Expected {expected} edge bytes for n={n}, found {actual}", body + min(actual, expected)
        )

    adj = [0] * n
    k = 0
    for offset in range(body, len(data)):
        value = data[offset] - _BIAS
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if k < len(pairs):
                if bit:
                    i, j = pairs[k]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6ParseException("Nonzero padding bits", offset)
            k += 1
    return Graph._unchecked(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    """graph6 text for ``g``, without header or newline."""
    out = bytearray(_encode_order(g.n))
    value = 0
    filled = 0
    for i, j in edge_pairs(g.n):
        value = (value << 1) | ((g.adj[i] >> j) & 1)
        filled += 1
        if filled == 6:
            out.append(value + _BIAS)
            value = filled = 0
    if filled:
        out.append((value << (6 - filled)) + _BIAS)
    return out.decode("ascii")
