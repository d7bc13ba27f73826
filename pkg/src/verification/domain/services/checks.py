# src/verification/domain/services/checks.py
"""Executable statements checked graph by graph during a sweep.

Each check sees every graph of its scope. With screening on, ``needs_exact``
looks at float values first and only graphs close to a decision boundary reach
``observe``, which decides in exact arithmetic. Everything a record reports is
decided in ``observe``, so screened and pure-exact sweeps agree.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property
from typing import ClassVar, Optional

from src.enumeration.domain.value_objects.graph_filter import Connectivity
from src.graphs.domain.services.structure import classify, delete_edge, is_connected, is_two_connected
from src.graphs.domain.value_objects.graph import Graph
from src.graphs.domain.value_objects.graph_class import GraphClass
from src.graphs.infrastructure.codecs.graph6 import encode_graph6
from src.numerics.domain.value_objects.matrix import Matrix
from src.resistance.domain.services.float_screen import ScreenBatch
from src.resistance.domain.services.recursion import block_accelerated_resistance, deletion_update
from src.resistance.domain.services.resistance_engine import analyze, resistance_matrix
from src.resistance.domain.value_objects.resistance_report import ResistanceReport
from src.verification.domain.services.tally import Tally


class GraphEvaluation:
    """Lazily computed exact data for one graph, shared by every check in a sweep."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.exact_solves = 0

    @cached_property
    def graph6(self) -> str:
        return encode_graph6(self.graph)

    @cached_property
    def graph_class(self) -> GraphClass:
        return classify(self.graph)

    @cached_property
    def report(self) -> ResistanceReport:
        self.exact_solves += 1
        return analyze(self.graph)

    @cached_property
    def resistance(self) -> Matrix:
        if "report" in self.__dict__:
            return self.report.r
        self.exact_solves += 1
        return resistance_matrix(self.graph)


class TheoremCheck(ABC):
    """One statement over the graphs of ``scope``; results accumulate in ``tally``."""

    theorem_id: ClassVar[str]
    scope: ClassVar[Connectivity] = Connectivity.CONNECTED
    screenable: ClassVar[bool] = True

    def __init__(self, n: int, tolerance: float = 1e-6):
        self.n = n
        self.tolerance = tolerance
        self.tally = Tally()

    @property
    def extremal_value(self) -> Optional[Fraction]:
        return None

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return True

    @abstractmethod
    def observe(self, evaluation: GraphEvaluation) -> None:
        ...

    def _violation(self, evaluation: GraphEvaluation) -> None:
        self.tally.violations.add(evaluation.graph6)

    def _near_regular(self, screen: ScreenBatch, k: int) -> bool:
        row = screen.ecc[k]
        return float(row.max() - row.min()) <= self.tolerance


class EccentricityBoundCheck(TheoremCheck):
    """2-connected: every Omega_G(u) <= (n^2-1)/6; equality at some vertex iff at every vertex iff G is a cycle."""

    theorem_id = "eccentricity-bound"
    scope = Connectivity.TWO_CONNECTED

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n * n - 1, 6)

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return float(screen.ecc[k].max()) >= float(self.bound) - self.tolerance

    def observe(self, evaluation: GraphEvaluation) -> None:
        ecc = evaluation.report.ecc
        if max(ecc) > self.bound:
            self._violation(evaluation)
            return
        attained = [value == self.bound for value in ecc]
        if not any(attained):
            return
        if all(attained) and evaluation.graph_class.is_cycle:
            self.tally.witnesses.add(evaluation.graph6)
        else:
            self._violation(evaluation)


class ConstantCurvatureTwoConnectedCheck(TheoremCheck):
    """Connected, n >= 3: resistance-regular implies 2-connected.

    No value is extremal here; the resistance-regular graphs seen are listed
    in ``tally.regular_graphs`` instead of as equality witnesses.
    """

    theorem_id = "constant-curvature-two-connected"

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return self._near_regular(screen, k)

    def observe(self, evaluation: GraphEvaluation) -> None:
        if not evaluation.report.resistance_regular:
            return
        self.tally.regular_graphs.add(evaluation.graph6)
        if not is_two_connected(evaluation.graph):
            self._violation(evaluation)


class CurvatureLowerCheck(TheoremCheck):
    """Resistance-regular: K_G >= 6/(n^2-1), equality only for cycles; also K_G > 1/(n(n-1))."""

    theorem_id = "curvature-lower"

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(6, n * n - 1)
        self.coarse_bound = Fraction(1, n * (n - 1))

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return self._near_regular(screen, k)

    def observe(self, evaluation: GraphEvaluation) -> None:
        report = evaluation.report
        if not report.resistance_regular:
            return
        value = report.constant_curvature
        if value < self.bound or value <= self.coarse_bound:
            self._violation(evaluation)
        elif value == self.bound:
            if evaluation.graph_class.is_cycle:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)


class CurvatureUpperCheck(TheoremCheck):
    """Resistance-regular: K_G <= n/(2n-2), equality only for K_n."""

    theorem_id = "curvature-upper"

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n, 2 * n - 2)

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return self._near_regular(screen, k)

    def observe(self, evaluation: GraphEvaluation) -> None:
        report = evaluation.report
        if not report.resistance_regular:
            return
        value = report.constant_curvature
        if value > self.bound:
            self._violation(evaluation)
        elif value == self.bound:
            if evaluation.graph_class.is_complete:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)


class KirchhoffUpperCheck(TheoremCheck):
    """2-connected: Kf <= (n^3-n)/12, equality only for cycles. Tracks the runner-up value."""

    theorem_id = "kirchhoff-upper"
    scope = Connectivity.TWO_CONNECTED

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n ** 3 - n, 12)
        self._runner_floor = float("-inf")

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        kf = float(screen.kf[k])
        if kf >= float(self.bound) - self.tolerance:
            return True
        if kf >= self._runner_floor - self.tolerance:
            self._runner_floor = max(self._runner_floor, kf)
            return True
        return False

    def observe(self, evaluation: GraphEvaluation) -> None:
        kf = evaluation.report.kf
        if kf > self.bound:
            self._violation(evaluation)
        elif kf == self.bound:
            if evaluation.graph_class.is_cycle:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)
        else:
            self.tally.offer_runner_up(kf, evaluation.graph6)


class KirchhoffLowerCheck(TheoremCheck):
    """Connected: Kf >= n-1, equality only for K_n."""

    theorem_id = "kirchhoff-lower"

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n - 1)

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return float(screen.kf[k]) <= float(self.bound) + self.tolerance

    def observe(self, evaluation: GraphEvaluation) -> None:
        kf = evaluation.report.kf
        if kf < self.bound:
            self._violation(evaluation)
        elif kf == self.bound:
            if evaluation.graph_class.is_complete:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)


class KirchhoffRegularLowerCheck(TheoremCheck):
    """Resistance-regular: Kf >= n-1, equality only for K_n."""

    theorem_id = "kirchhoff-regular-lower"

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n - 1)

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return self._near_regular(screen, k)

    def observe(self, evaluation: GraphEvaluation) -> None:
        report = evaluation.report
        if not report.resistance_regular:
            return
        if report.kf < self.bound:
            self._violation(evaluation)
        elif report.kf == self.bound:
            if evaluation.graph_class.is_complete:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)


class KirchhoffRegularUpperCheck(TheoremCheck):
    """Resistance-regular: Kf <= (n^3-n)/12, equality only for cycles."""

    theorem_id = "kirchhoff-regular-upper"

    def __init__(self, n: int, tolerance: float = 1e-6):
        super().__init__(n, tolerance)
        self.bound = Fraction(n ** 3 - n, 12)

    @property
    def extremal_value(self) -> Fraction:
        return self.bound

    def needs_exact(self, screen: ScreenBatch, k: int) -> bool:
        return self._near_regular(screen, k)

    def observe(self, evaluation: GraphEvaluation) -> None:
        report = evaluation.report
        if not report.resistance_regular:
            return
        if report.kf > self.bound:
            self._violation(evaluation)
        elif report.kf == self.bound:
            if evaluation.graph_class.is_cycle:
                self.tally.witnesses.add(evaluation.graph6)
            else:
                self._violation(evaluation)


class MetricAxiomsCheck(TheoremCheck):
    """Zero diagonal, symmetry, positivity and the triangle inequality, exactly."""

    theorem_id = "metric-axioms"
    screenable = False

    def observe(self, evaluation: GraphEvaluation) -> None:
        r = evaluation.resistance
        n = r.rows
        for u in range(n):
            if r[u, u] != 0:
                self._violation(evaluation)
                return
            for v in range(u + 1, n):
                if r[u, v] != r[v, u] or r[u, v] <= 0:
                    self._violation(evaluation)
                    return
        for u in range(n):
            for v in range(n):
                for w in range(n):
                    if r[u, w] > r[u, v] + r[v, w]:
                        self._violation(evaluation)
                        return


def _restorable_edges(graph: Graph):
    """Edges whose deletion leaves the graph connected, with the resulting graph."""
    for i, j in graph.edges():
        reduced = delete_edge(graph, i, j)
        if is_connected(reduced):
            yield i, j, reduced


class RayleighMonotonicityCheck(TheoremCheck):
    """Deleting an edge (keeping connectivity) never lowers a resistance or an eccentricity."""

    theorem_id = "rayleigh-monotonicity"
    screenable = False

    def observe(self, evaluation: GraphEvaluation) -> None:
        r = evaluation.resistance
        n = r.rows
        ecc = [sum(r.row(u), Fraction(0)) for u in range(n)]
        for _, _, reduced in _restorable_edges(evaluation.graph):
            r_minus = resistance_matrix(reduced)
            evaluation.exact_solves += 1
            if any(a < b for a, b in zip(r_minus.entries, r.entries)):
                self._violation(evaluation)
                return
            if any(sum(r_minus.row(u), Fraction(0)) < ecc[u] for u in range(n)):
                self._violation(evaluation)
                return


class DeletionFormulaCheck(TheoremCheck):
    """Restoring any edge with the single-edge recursion reproduces the direct solve exactly."""

    theorem_id = "deletion-formula"
    screenable = False

    def observe(self, evaluation: GraphEvaluation) -> None:
        r = evaluation.resistance
        for i, j, reduced in _restorable_edges(evaluation.graph):
            evaluation.exact_solves += 1
            if deletion_update(resistance_matrix(reduced), i, j) != r:
                self._violation(evaluation)
                return


class BlockCompositionCheck(TheoremCheck):
    """Block-by-block solve glued at cut vertices equals the direct solve exactly."""

    theorem_id = "block-composition"
    screenable = False

    def observe(self, evaluation: GraphEvaluation) -> None:
        if block_accelerated_resistance(evaluation.graph) != evaluation.resistance:
            self._violation(evaluation)
