# src/verification/domain/services/constructions.py
"""Checks over explicitly constructed graphs rather than a swept population."""

from fractions import Fraction

from src.graphs.domain.services.families import complete_graph, cycle_graph
from src.graphs.domain.services.structure import add_edge
from src.graphs.infrastructure.codecs.graph6 import encode_graph6
from src.resistance.domain.services.closed_forms import complete_closed_forms, cycle_closed_forms
from src.resistance.domain.services.recursion import deletion_update
from src.resistance.domain.services.resistance_engine import analyze, resistance_matrix
from src.shared.domain.exceptions.base import ValidationException
from src.verification.domain.services.tally import Tally


def cycle_chords(n: int) -> list[tuple[int, int]]:
    """Non-edges of C_n labeled 0..n-1 around the cycle, n(n-3)/2 of them."""
    return [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]


def check_closed_forms(n: int) -> Tally:
    """analyze(C_n) and analyze(K_n) against their closed forms, exactly."""
    if n < 3:
        raise ValidationException(f"Closed-form checks need n >= 3, got {n}")
    tally = Tally(population=2)

    cycle = cycle_graph(n)
    forms = cycle_closed_forms(n)
    report = analyze(cycle)
    r = report.r
    pairs_ok = all(
        r[u, v] == forms.pair_resistance(min(abs(u - v), n - abs(u - v)))
        for u in range(n) for v in range(n)
    )
    if not (
        pairs_ok
        and all(value == forms.ecc for value in report.ecc)
        and report.kf == forms.kf
        and report.constant_curvature == forms.kappa
    ):
        tally.violations.add(encode_graph6(cycle))

    complete = complete_graph(n)
    forms_k = complete_closed_forms(n)
    report = analyze(complete)
    r = report.r
    pairs_ok = all(r[u, v] == forms_k.pair_resistance for u in range(n) for v in range(n) if u != v)
    if not (pairs_ok and report.kf == forms_k.kf and report.constant_curvature == forms_k.kappa):
        tally.violations.add(encode_graph6(complete))
    return tally


def check_chord_reduction(n: int) -> Tally:
    """Each chord added to C_n pushes every eccentricity strictly below (n^2-1)/6.

    The chorded matrix comes from the single-edge recursion applied to R(C_n)
    and must also equal the direct solve.
    """
    if n < 3:
        raise ValidationException(f"Chord reduction needs n >= 3, got {n}")
    cycle = cycle_graph(n)
    base = resistance_matrix(cycle)
    bound = Fraction(n * n - 1, 6)
    chords = cycle_chords(n)
    tally = Tally(population=len(chords))

    for i, j in chords:
        chorded = add_edge(cycle, i, j)
        updated = deletion_update(base, i, j)
        eccentricities = (sum(updated.row(u), Fraction(0)) for u in range(n))
        if any(value >= bound for value in eccentricities) or updated != resistance_matrix(chorded):
            tally.violations.add(encode_graph6(chorded))
    return tally
