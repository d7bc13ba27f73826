# src/numerics/domain/value_objects/matrix.py
"""Dense matrices over an exact (rational) or float number domain."""

from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np

from src.shared.domain.exceptions.base import ValidationException
from src.shared.domain.value_objects.base import ValueObject

# Every resistance quantity on a unit-resistor graph is rational.
ExactNumber = Fraction


class NumberDomain(str, Enum):
    EXACT = "exact"
    FLOAT = "float"

    def coerce(self, value: Any) -> Fraction | float:
        return Fraction(value) if self is NumberDomain.EXACT else float(value)

    @property
    def zero(self) -> Fraction | float:
        return Fraction(0) if self is NumberDomain.EXACT else 0.0


class Matrix(ValueObject):
    """Row-major ``rows x cols`` matrix; entries are Fractions or floats according to ``domain``."""

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Iterable[Any],
        domain: NumberDomain = NumberDomain.EXACT,
    ):
        values = tuple(domain.coerce(value) for value in entries)
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise ValidationException(f"{len(values)} entries do not fill a {rows}x{cols} matrix")
        self._rows = rows
        self._cols = cols
        self._entries = values
        self._domain = domain

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], domain: NumberDomain = NumberDomain.EXACT) -> "Matrix":
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise ValidationException("Ragged rows")
        return cls(len(rows), width, (value for row in rows for value in row), domain)

    @classmethod
    def identity(cls, n: int, domain: NumberDomain = NumberDomain.EXACT) -> "Matrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)), domain)

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> "Matrix":
        rows, cols = array.shape
        return cls(rows, cols, array.ravel().tolist(), NumberDomain.FLOAT)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple:
        return self._entries

    @property
    def domain(self) -> NumberDomain:
        return self._domain

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction | float:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"({i}, {j}) outside {self._rows}x{self._cols}")
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> tuple:
        start = i * self._cols
        return self._entries[start:start + self._cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self._rows)]

    def to_numpy(self) -> np.ndarray:
        return np.array([float(value) for value in self._entries], dtype=float).reshape(self._rows, self._cols)

    def to_domain(self, domain: NumberDomain) -> "Matrix":
        if domain is self._domain:
            return self
        return Matrix(self._rows, self._cols, self._entries, domain)

    def matvec(self, vector: Sequence[Any]) -> tuple:
        if len(vector) != self._cols:
            raise ValidationException(f"Vector of length {len(vector)} does not match {self._cols} columns")
        vector = [self._domain.coerce(value) for value in vector]
        return tuple(sum((a * x for a, x in zip(self.row(i), vector)), self._domain.zero) for i in range(self._rows))

    def matmul(self, other: "Matrix") -> "Matrix":
        if self._cols != other.rows:
            raise ValidationException(f"Cannot multiply {self._rows}x{self._cols} by {other.rows}x{other.cols}")
        columns = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        return Matrix(
            self._rows,
            other.cols,
            (sum((a * b for a, b in zip(self.row(i), column)), self._domain.zero)
             for i in range(self._rows) for column in columns),
            self._domain,
        )

    def max_abs_difference(self, other: "Matrix") -> float:
        if (self._rows, self._cols) != (other.rows, other.cols):
            raise ValidationException("Shape mismatch")
        return max((abs(float(a) - float(b)) for a, b in zip(self._entries, other.entries)), default=0.0)

    def __repr__(self) -> str:
        return f"Matrix({self._domain.value}, {self.to_rows()})"
