# src/verification/domain/services/suites.py
"""Suite names and the checks each suite runs."""

from enum import Enum
from typing import Callable, Iterable

from src.shared.domain.exceptions.base import ValidationException
from src.verification.domain.services.checks import (
    BlockCompositionCheck,
    ConstantCurvatureTwoConnectedCheck,
    CurvatureLowerCheck,
    CurvatureUpperCheck,
    DeletionFormulaCheck,
    EccentricityBoundCheck,
    KirchhoffLowerCheck,
    KirchhoffRegularLowerCheck,
    KirchhoffRegularUpperCheck,
    KirchhoffUpperCheck,
    MetricAxiomsCheck,
    RayleighMonotonicityCheck,
    TheoremCheck,
)
from src.verification.domain.services.constructions import check_chord_reduction, check_closed_forms
from src.verification.domain.services.tally import Tally


class SuiteName(str, Enum):
    ECCENTRICITY = "eccentricity"
    TWO_CONNECTED = "two-connected"
    CURVATURE = "curvature"
    KIRCHHOFF = "kirchhoff"
    CLOSED_FORMS = "closed-forms"
    METRIC = "metric"
    RAYLEIGH = "rayleigh"
    DELETION = "deletion"
    BLOCKS = "blocks"
    CHORDS = "chords"


THEOREM_SUITES = (
    SuiteName.ECCENTRICITY,
    SuiteName.TWO_CONNECTED,
    SuiteName.CURVATURE,
    SuiteName.KIRCHHOFF,
    SuiteName.CLOSED_FORMS,
)
PROPERTY_SUITES = (
    SuiteName.METRIC,
    SuiteName.RAYLEIGH,
    SuiteName.DELETION,
    SuiteName.BLOCKS,
    SuiteName.CHORDS,
)
SUITE_ALIASES = {"all": THEOREM_SUITES, "properties": PROPERTY_SUITES}

_SWEEP_CHECKS: dict[SuiteName, tuple[type[TheoremCheck], ...]] = {
    SuiteName.ECCENTRICITY: (EccentricityBoundCheck,),
    SuiteName.TWO_CONNECTED: (ConstantCurvatureTwoConnectedCheck,),
    SuiteName.CURVATURE: (CurvatureLowerCheck, CurvatureUpperCheck),
    SuiteName.KIRCHHOFF: (
        KirchhoffUpperCheck,
        KirchhoffLowerCheck,
        KirchhoffRegularLowerCheck,
        KirchhoffRegularUpperCheck,
    ),
    SuiteName.METRIC: (MetricAxiomsCheck,),
    SuiteName.RAYLEIGH: (RayleighMonotonicityCheck,),
    SuiteName.DELETION: (DeletionFormulaCheck,),
    SuiteName.BLOCKS: (BlockCompositionCheck,),
}

# Suites decided over constructed graphs; both report under a single theorem id.
CONSTRUCTIONS: dict[SuiteName, tuple[str, Callable[[int], Tally]]] = {
    SuiteName.CLOSED_FORMS: ("closed-forms", check_closed_forms),
    SuiteName.CHORDS: ("chord-reduction", check_chord_reduction),
}

_PROPERTY_SWEEPS = {SuiteName.METRIC, SuiteName.RAYLEIGH, SuiteName.DELETION, SuiteName.BLOCKS}


def resolve_suites(names: Iterable[str | SuiteName]) -> tuple[SuiteName, ...]:
    """Expand aliases and drop repeats, keeping first-mention order."""
    resolved: list[SuiteName] = []
    for name in names:
        key = name.value if isinstance(name, SuiteName) else str(name).strip().lower()
        if key in SUITE_ALIASES:
            expanded = SUITE_ALIASES[key]
        else:
            try:
                expanded = (SuiteName(key),)
            except ValueError:
                choices = ", ".join([suite.value for suite in SuiteName] + list(SUITE_ALIASES))
                raise ValidationException(f"Unknown suite '{name}' (choose from {choices})")
        for suite in expanded:
            if suite not in resolved:
                resolved.append(suite)
    return tuple(resolved)


def min_order(suite: SuiteName) -> int:
    """Smallest n a suite accepts."""
    return 1 if suite in _PROPERTY_SWEEPS else 3


def is_sweep(suite: SuiteName) -> bool:
    return suite in _SWEEP_CHECKS


def build_checks(suite: SuiteName, n: int, tolerance: float = 1e-6) -> list[TheoremCheck]:
    """Fresh checks for one (suite, n) sweep, in record order."""
    if n < min_order(suite):
        raise ValidationException(f"Suite '{suite.value}' needs n >= {min_order(suite)}, got {n}")
    return [check_type(n, tolerance) for check_type in _SWEEP_CHECKS[suite]]
