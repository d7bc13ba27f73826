# src/resistance/domain/services/resistance_engine.py
"""Resistance distances, eccentricities, Kirchhoff index and resistance curvature."""

from fractions import Fraction

from src.graphs.domain.exceptions import DisconnectedGraphException
from src.graphs.domain.services.structure import is_connected
from src.graphs.domain.value_objects.graph import Graph
from src.numerics.domain.services.linear_solver import invert, solve_linear_system
from src.numerics.domain.value_objects.matrix import Matrix, NumberDomain
from src.resistance.domain.value_objects.resistance_report import ResistanceReport
from src.shared.domain.exceptions.base import (
    BusinessRuleException,
    InvariantViolationException,
    NotFoundException,
)


def laplacian(g: Graph, domain: NumberDomain = NumberDomain.EXACT) -> Matrix:
    """Degree on the diagonal, -1 on edges, 0 elsewhere."""
    n = g.n
    entries = []
    for i in range(n):
        row = g.adj[i]
        for j in range(n):
            if i == j:
                entries.append(g.degree(i))
            else:
                entries.append(-((row >> j) & 1))
    return Matrix(n, n, entries, domain)


def resistance_matrix(g: Graph, domain: NumberDomain = NumberDomain.EXACT, ground: int = 0) -> Matrix:
    """All-pairs resistance distances from the Laplacian grounded at ``ground``.

    With X the inverse of the grounded Laplacian (row/column of ``ground`` read as
    zero), Omega(i, j) = X[i][i] + X[j][j] - 2 X[i][j].
    """
    if not is_connected(g):
        raise DisconnectedGraphException("Resistance distances need a connected graph (grounded Laplacian is singular)")
    g.require_vertex(ground)
    n = g.n
    if n == 1:
        return Matrix(1, 1, [0], domain)

    full = laplacian(g, domain)
    kept = [v for v in range(n) if v != ground]
    grounded = Matrix.from_rows([[full[i, j] for j in kept] for i in kept], domain)
    inverse = invert(grounded)

    position = {v: k for k, v in enumerate(kept)}
    zero = domain.zero

    def x(i: int, j: int):
        if i == ground or j == ground:
            return zero
        return inverse[position[i], position[j]]

    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(zero if i == j else x(i, i) + x(j, j) - 2 * x(i, j))
    return Matrix(n, n, entries, domain)


def resistive_eccentricity(report: ResistanceReport, u: int) -> Fraction:
    """Sum of resistance distances from ``u`` to every other vertex."""
    if not 0 <= u < report.n:
        raise NotFoundException(f"Vertex {u} out of range 0..{report.n - 1}", vertex=u)
    return sum(report.r.row(u), Fraction(0))


def kirchhoff_index(report: ResistanceReport) -> Fraction:
    """Half the sum of all eccentricities."""
    return sum(report.ecc, Fraction(0)) / 2


def _curvature_from_resistance(r: Matrix) -> tuple:
    return solve_linear_system(r, [1] * r.rows)


def curvature_vector(g: Graph) -> tuple[Fraction, ...]:
    """The unique exact solution kappa of R kappa = 1."""
    if g.n == 1:
        raise BusinessRuleException("Curvature is undefined for n = 1: the resistance matrix [[0]] is singular")
    return _curvature_from_resistance(resistance_matrix(g))


def analyze(g: Graph) -> ResistanceReport:
    """Exact resistance report, cross-checked against the constant-curvature identities."""
    if g.n == 1:
        raise BusinessRuleException("Analysis needs n >= 2: the resistance matrix [[0]] is singular")
    r = resistance_matrix(g)
    n = g.n
    ecc = tuple(sum(r.row(u), Fraction(0)) for u in range(n))
    kf = sum(ecc, Fraction(0)) / 2
    kappa = _curvature_from_resistance(r)

    if r.matvec(kappa) != tuple(Fraction(1) for _ in range(n)):
        raise InvariantViolationException("R kappa != 1 after an exact solve")

    regular = all(value == ecc[0] for value in ecc)
    constant = None
    if regular:
        constant = 1 / ecc[0]
        if constant != Fraction(n) / (2 * kf) or any(value != constant for value in kappa):
            raise InvariantViolationException(
                "Constant curvature disagrees with 1/ecc and n/(2 Kf)",
                constant=str(constant),
                kf=str(kf),
            )
    elif len(set(kappa)) == 1:
        raise InvariantViolationException("Constant curvature on a graph that is not resistance-regular")

    return ResistanceReport(
        n=n,
        r=r,
        ecc=ecc,
        kf=kf,
        kappa=kappa,
        resistance_regular=regular,
        constant_curvature=constant,
    )
