# src/resistance/domain/services/closed_forms.py
"""Closed forms for C_n and K_n."""

from src.resistance.domain.value_objects.closed_forms import CompleteClosedForms, CycleClosedForms
from src.shared.domain.exceptions.base import ValidationException


def cycle_closed_forms(n: int) -> CycleClosedForms:
    if n < 3:
        raise ValidationException(f"Cycle closed forms need n >= 3, got {n}")
    return CycleClosedForms(n)


def complete_closed_forms(n: int) -> CompleteClosedForms:
    if n < 2:
        raise ValidationException(f"Complete-graph closed forms need n >= 2, got {n}")
    return CompleteClosedForms(n)
