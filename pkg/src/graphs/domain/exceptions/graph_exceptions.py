# src/graphs/domain/exceptions/graph_exceptions.py
"""Graph context exceptions."""

from src.shared.domain.exceptions.base import BusinessRuleException, ValidationException


class Graph6ParseException(ValidationException):
    """Malformed graph6 text; ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} (at {where})", offset=offset, line=line)
        self.offset = offset
        self.line = line

    def at_line(self, line: int) -> "Graph6ParseException":
        """Same error, annotated with the stream line it came from."""
        reason = self.message.rsplit(" (at ", 1)[0]
        return type(self)(reason, self.offset, line)


class UnsupportedFormatException(Graph6ParseException):
    """sparse6 / digraph6 input handed to the graph6 reader."""
    pass


class EdgeListParseException(ValidationException):
    """Malformed edge-list text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})", line=line)
        self.line = line


class DisconnectedGraphException(BusinessRuleException):
    """Operation requires a connected graph."""
    pass
