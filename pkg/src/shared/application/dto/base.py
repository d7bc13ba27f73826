# src/shared/application/dto/base.py
"""Base DTO classes."""

from abc import ABC
from fractions import Fraction
from typing import Annotated

from pydantic import BaseModel, ConfigDict, PlainSerializer


def format_rational(value: Fraction | int) -> str:
    """Render an exact number as ``"p/q"`` (integers become ``"p/1"``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    return Fraction(text)


Rational = Annotated[Fraction, PlainSerializer(format_rational, return_type=str)]


class BaseDTO(BaseModel, ABC):
    """Base class for DTOs."""

    model_config = ConfigDict(
        from_attributes=True,
        validate_assignment=True,
        arbitrary_types_allowed=True,
    )


class ResponseDTO(BaseDTO):
    """Base class for documents written to the output stream."""

    def to_json(self) -> str:
        """One NDJSON line (without the trailing newline)."""
        return self.model_dump_json()
