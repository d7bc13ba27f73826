# src/shared/domain/exceptions/base.py
"""Base domain exceptions."""

from typing import Any


class DomainException(Exception):
    """Base exception for domain layer."""

    def __init__(self, message: str, error_code: str | None = None, **context: Any):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.context = context


class ValidationException(DomainException):
    """Exception for malformed input (parse errors, bad indices, bad arguments)."""
    pass


class BusinessRuleException(DomainException):
    """Exception for mathematical preconditions that do not hold."""
    pass


class NotFoundException(DomainException):
    """Exception for a missing vertex or edge."""
    pass


class InvariantViolationException(DomainException):
    """An internal cross-check between independently computed quantities failed."""
    pass
