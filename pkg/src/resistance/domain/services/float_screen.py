# src/resistance/domain/services/float_screen.py
"""Batched float resistance quantities, used to decide which graphs need an exact recheck."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.graphs.domain.value_objects.graph import Graph
from src.shared.domain.exceptions.base import ValidationException


@dataclass(frozen=True)
class ScreenBatch:
    """Float quantities for a batch of connected graphs of one order; row k belongs to graph k."""

    ecc: np.ndarray  # (b, n)
    kf: np.ndarray  # (b,)

    def __len__(self) -> int:
        return self.kf.shape[0]


def _adjacency_stack(graphs: Sequence[Graph], n: int) -> np.ndarray:
    if n <= 62:
        rows = np.array([g.adj for g in graphs], dtype=np.int64)
        return ((rows[:, :, None] >> np.arange(n, dtype=np.int64)) & 1).astype(float)
    return np.array([[[(row >> j) & 1 for j in range(n)] for row in g.adj] for g in graphs], dtype=float)


def screen_batch(graphs: Sequence[Graph]) -> ScreenBatch:
    """Float eccentricities and Kirchhoff indices for connected graphs sharing one order n >= 2.

    Uses L+ = (L + J/n)^-1 - J/n and R = diag(L+) 1^T + 1 diag(L+)^T - 2 L+.
    """
    if not graphs:
        raise ValidationException("Cannot screen an empty batch")
    n = graphs[0].n
    if n < 2 or any(g.n != n for g in graphs):
        raise ValidationException("Screened graphs must share one order n >= 2")

    adjacency = _adjacency_stack(graphs, n)
    lap = -adjacency
    diagonal = np.arange(n)
    lap[:, diagonal, diagonal] = adjacency.sum(axis=2)

    pseudo = np.linalg.inv(lap + 1.0 / n) - 1.0 / n
    d = np.diagonal(pseudo, axis1=1, axis2=2)
    resistance = d[:, :, None] + d[:, None, :] - 2.0 * pseudo
    resistance[:, diagonal, diagonal] = 0.0

    ecc = resistance.sum(axis=2)
    kf = ecc.sum(axis=1) / 2.0
    return ScreenBatch(ecc=ecc, kf=kf)
