# src/resistance/domain/value_objects/resistance_report.py
"""Per-graph bundle of resistance quantities."""

from fractions import Fraction
from typing import Optional

from src.numerics.domain.value_objects.matrix import Matrix
from src.shared.domain.value_objects.base import ValueObject


class ResistanceReport(ValueObject):
    """Resistance matrix, eccentricities, Kirchhoff index and curvature of one connected graph.

    ``constant_curvature`` is present exactly when the graph is resistance-regular.
    """

    def __init__(
        self,
        n: int,
        r: Matrix,
        ecc: tuple[Fraction, ...],
        kf: Fraction,
        kappa: tuple[Fraction, ...],
        resistance_regular: bool,
        constant_curvature: Optional[Fraction],
    ):
        self.n = n
        self.r = r
        self.ecc = tuple(ecc)
        self.kf = kf
        self.kappa = tuple(kappa)
        self.resistance_regular = resistance_regular
        self.constant_curvature = constant_curvature

    @property
    def max_eccentricity(self) -> Fraction:
        return max(self.ecc)
