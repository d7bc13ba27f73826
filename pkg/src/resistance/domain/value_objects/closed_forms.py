# src/resistance/domain/value_objects/closed_forms.py
"""Closed-form resistance quantities of the cycle and the complete graph."""

from fractions import Fraction

from src.shared.domain.exceptions.base import ValidationException
from src.shared.domain.value_objects.base import ValueObject


class CycleClosedForms(ValueObject):
    """C_n: pair resistance d(n-d)/n, eccentricity (n^2-1)/6, Kf (n^3-n)/12, curvature 6/(n^2-1)."""

    def __init__(self, n: int):
        self.n = n
        self.ecc = Fraction(n * n - 1, 6)
        self.kf = Fraction(n ** 3 - n, 12)
        self.kappa = Fraction(6, n * n - 1)

    def pair_resistance(self, d: int) -> Fraction:
        """Resistance between two vertices at graph distance ``d`` on C_n."""
        if not 0 <= d <= self.n // 2:
            raise ValidationException(f"Distance {d} outside 0..{self.n // 2} on C_{self.n}")
        return Fraction(d * (self.n - d), self.n)


class CompleteClosedForms(ValueObject):
    """K_n: pair resistance 2/n, Kf n-1, curvature n/(2n-2)."""

    def __init__(self, n: int):
        self.n = n
        self.pair_resistance = Fraction(2, n)
        self.kf = Fraction(n - 1)
        self.kappa = Fraction(n, 2 * n - 2)
