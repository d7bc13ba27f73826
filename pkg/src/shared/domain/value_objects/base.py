# src/shared/domain/value_objects/base.py
"""Base value object class."""

from abc import ABC
from typing import Any


class ValueObject(ABC):
    """Base class for immutable value objects.

    Equality and hashing go through ``_key()``, which defaults to the instance
    attributes in definition order. Subclasses holding large payloads override
    it with something cheaper.
    """

    def _key(self) -> tuple:
        return tuple(self.__dict__.values())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, self.__class__):
            return False
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self._key()))

    def __repr__(self) -> str:
        attrs = ", ".join(f"{k.lstrip('_')}={v!r}" for k, v in self.__dict__.items())
        return f"{self.__class__.__name__}({attrs})"
