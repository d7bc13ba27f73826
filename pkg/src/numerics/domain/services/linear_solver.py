# src/numerics/domain/services/linear_solver.py
"""Gaussian elimination in the exact and float domains."""

from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from src.numerics.domain.exceptions import SingularityKind, SingularMatrixException
from src.numerics.domain.value_objects.matrix import Matrix, NumberDomain
from src.shared.domain.exceptions.base import ValidationException

DEFAULT_SINGULAR_TOLERANCE = 1e-12


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise ValidationException(f"Expected a square matrix, got {a.rows}x{a.cols}")


def _gauss_jordan_exact(m: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduce ``m`` to the identity in place, applying the same row operations to ``rhs``.

    The pivot is the first nonzero entry at or below the diagonal.
    """
    n = len(m)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixException(SingularityKind.STRUCTURAL, col)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]

        inverse = 1 / m[col][col]
        pivot_row = [value * inverse for value in m[col]]
        pivot_rhs = [value * inverse for value in rhs[col]]
        m[col], rhs[col] = pivot_row, pivot_rhs

        for r in range(n):
            factor = m[r][col]
            if r == col or factor == 0:
                continue
            m[r] = [x - factor * y for x, y in zip(m[r], pivot_row)]
            rhs[r] = [x - factor * y for x, y in zip(rhs[r], pivot_rhs)]
    return rhs


def _eliminate_float(m: np.ndarray, rhs: np.ndarray, tolerance: float) -> np.ndarray:
    """Partial-pivoting elimination plus back substitution; ``rhs`` is n x k."""
    n = m.shape[0]
    scale = np.abs(m).max(axis=1) if n else np.zeros(0)
    for k in range(n):
        p = k + int(np.argmax(np.abs(m[k:, k])))
        if scale[p] == 0.0 or abs(m[p, k]) < tolerance * scale[p]:
            raise SingularMatrixException(SingularityKind.NUMERICAL, k)
        if p != k:
            m[[k, p]] = m[[p, k]]
            rhs[[k, p]] = rhs[[p, k]]
            scale[[k, p]] = scale[[p, k]]
        factors = m[k + 1:, k] / m[k, k]
        m[k + 1:, k:] -= np.outer(factors, m[k, k:])
        rhs[k + 1:] -= np.outer(factors, rhs[k])

    x = np.zeros_like(rhs)
    for k in range(n - 1, -1, -1):
        x[k] = (rhs[k] - m[k, k + 1:] @ x[k + 1:]) / m[k, k]
    return x


def solve_linear_system(
    a: Matrix,
    b: Sequence[Any],
    tolerance: float = DEFAULT_SINGULAR_TOLERANCE,
) -> tuple:
    """Solve ``a x = b``; exact matrices give an exact answer, float ones a backward-stable one."""
    _require_square(a)
    if len(b) != a.rows:
        raise ValidationException(f"Right-hand side of length {len(b)} does not match dimension {a.rows}")

    if a.domain is NumberDomain.EXACT:
        solution = _gauss_jordan_exact(a.to_rows(), [[Fraction(value)] for value in b])
        return tuple(row[0] for row in solution)

    solution = _eliminate_float(a.to_numpy(), np.array(b, dtype=float).reshape(-1, 1), tolerance)
    return tuple(float(value) for value in solution[:, 0])


def invert(a: Matrix, tolerance: float = DEFAULT_SINGULAR_TOLERANCE) -> Matrix:
    """Inverse of ``a`` in its own domain; exact inverses satisfy a * invert(a) = I exactly."""
    _require_square(a)
    n = a.rows
    if a.domain is NumberDomain.EXACT:
        identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        inverse = _gauss_jordan_exact(a.to_rows(), identity)
        return Matrix(n, n, (value for row in inverse for value in row), NumberDomain.EXACT)

    inverse = _eliminate_float(a.to_numpy(), np.eye(n), tolerance)
    return Matrix.from_numpy(inverse)
