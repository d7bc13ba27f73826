# src/verification/domain/services/sweep.py
"""Runs a set of checks over one population of same-order graphs."""

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Optional, Sequence

from src.enumeration.domain.value_objects.graph_filter import Connectivity
from src.graphs.domain.services.structure import is_connected, is_two_connected
from src.graphs.domain.value_objects.graph import Graph
from src.resistance.domain.services.float_screen import ScreenBatch, screen_batch
from src.verification.domain.services.checks import GraphEvaluation, TheoremCheck


@dataclass
class SweepStats:
    graphs: int = 0
    screened: int = 0
    exact: int = 0

    def merge(self, other: "SweepStats") -> "SweepStats":
        self.graphs += other.graphs
        self.screened += other.screened
        self.exact += other.exact
        return self


def _in_scope(scope: Connectivity, connected: bool, two_connected: bool) -> bool:
    if scope is Connectivity.TWO_CONNECTED:
        return two_connected
    if scope is Connectivity.CONNECTED:
        return connected
    return True


def run_sweep(
    graphs: Iterable[Graph],
    checks: Sequence[TheoremCheck],
    exact_only: bool = False,
    batch_size: int = 2048,
) -> SweepStats:
    """Feed every graph to the checks whose scope it belongs to.

    Graphs are taken in batches of ``batch_size``. Unless ``exact_only``, each
    batch of connected graphs is screened in floating point first and a
    screenable check only sees the graphs its ``needs_exact`` flags.
    """
    stats = SweepStats()
    if not checks:
        return stats
    wants_two_connected = any(check.scope is Connectivity.TWO_CONNECTED for check in checks)
    source = iter(graphs)

    while True:
        batch = list(islice(source, batch_size))
        if not batch:
            return stats
        stats.graphs += len(batch)

        members: list[tuple[Graph, list[TheoremCheck]]] = []
        for graph in batch:
            connected = is_connected(graph)
            two_connected = connected and wants_two_connected and is_two_connected(graph)
            scoped = [check for check in checks if _in_scope(check.scope, connected, two_connected)]
            for check in scoped:
                check.tally.population += 1
            if scoped:
                members.append((graph, scoped))

        screen: Optional[ScreenBatch] = None
        screenable = [graph for graph, scoped in members if any(check.screenable for check in scoped)]
        if not exact_only and screenable and screenable[0].n >= 2:
            screen = screen_batch(screenable)
            stats.screened += len(screenable)

        row = 0
        for graph, scoped in members:
            evaluation = GraphEvaluation(graph)
            k = None
            if screen is not None and any(check.screenable for check in scoped):
                k = row
                row += 1
            touched = False
            for check in scoped:
                if k is None or not check.screenable or check.needs_exact(screen, k):
                    check.observe(evaluation)
                    touched = True
            if touched:
                stats.exact += 1
