from src.graphs.domain.exceptions.graph_exceptions import (
    DisconnectedGraphException,
    EdgeListParseException,
    Graph6ParseException,
    UnsupportedFormatException,
)

__all__ = [
    "DisconnectedGraphException",
    "EdgeListParseException",
    "Graph6ParseException",
    "UnsupportedFormatException",
]
