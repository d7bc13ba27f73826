# src/numerics/domain/exceptions/__init__.py
"""Numerics exceptions."""

from enum import Enum

from src.shared.domain.exceptions.base import BusinessRuleException


class SingularityKind(str, Enum):
    STRUCTURAL = "structurally singular"
    NUMERICAL = "numerically singular"


class SingularMatrixException(BusinessRuleException):
    """No unique solution. ``kind`` tells an exact zero pivot column from a tiny float pivot."""

    def __init__(self, kind: SingularityKind, column: int):
        super().__init__(f"Matrix is {kind.value} (no usable pivot in column {column})", kind=kind.value, column=column)
        self.kind = kind
        self.column = column
