# src/enumeration/domain/exceptions/__init__.py
"""Enumeration exceptions."""

from src.shared.domain.exceptions.base import BusinessRuleException


class EnumerationCapException(BusinessRuleException):
    """Requested order is outside the labeled-enumeration cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n={n} is outside the enumeration range 1..{cap}; pipe graph6 from an external generator "
            f"(for example `geng -c {n}`) or raise OHMCURVE_CAP",
            n=n,
            cap=cap,
        )
        self.n = n
        self.cap = cap
