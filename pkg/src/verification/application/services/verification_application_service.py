# src/verification/application/services/verification_application_service.py
"""Verification application service."""

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import structlog

from src.config import DEFAULT_ENUMERATION_CAP, Settings, get_settings
from src.enumeration.domain.services.enumerator import check_cap, chunk_ranges, enumerate_range, mask_count
from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.graphs.domain.value_objects.graph import Graph
from src.shared.domain.exceptions.base import ValidationException
from src.shared.infrastructure.monitoring.metrics import (
    EXACT_RECHECKS,
    GRAPHS_SCREENED,
    SWEEP_SECONDS,
    VIOLATIONS,
)
from src.verification.domain.services.checks import TheoremCheck
from src.verification.domain.services.suites import (
    CONSTRUCTIONS,
    SuiteName,
    build_checks,
    is_sweep,
    min_order,
    resolve_suites,
)
from src.verification.domain.services.sweep import SweepStats, run_sweep
from src.verification.domain.services.tally import Tally
from src.verification.domain.value_objects.verification_record import PopulationSource, VerificationRecord

logger = structlog.get_logger()

# Chunks per worker; smaller chunks even out the uneven cost of dense masks.
_CHUNKS_PER_JOB = 4


def _sweep_chunk(
    suite: str,
    n: int,
    start: int,
    stop: int,
    exact_only: bool,
    batch_size: int,
    tolerance: float,
) -> tuple[list[Tally], SweepStats]:
    """Worker entry point: sweep masks start..stop-1 with fresh checks."""
    checks = build_checks(SuiteName(suite), n, tolerance)
    stats = run_sweep(enumerate_range(n, start, stop, GraphFilter.connected()), checks, exact_only, batch_size)
    return [check.tally for check in checks], stats


class VerificationApplicationService:
    """Runs suites over enumerated or streamed populations and produces records."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        exact_only: bool = False,
        jobs: Optional[int] = None,
    ):
        self.settings = settings or get_settings()
        self.exact_only = exact_only
        self.jobs = jobs or self.settings.jobs
        if self.jobs < 1:
            raise ValidationException(f"jobs must be at least 1, got {self.jobs}")

    # Theorem verifiers

    def verify_eccentricity_bound(self, n: int, graphs: Optional[Iterable[Graph]] = None) -> VerificationRecord:
        (record,) = self._sweep_suite(SuiteName.ECCENTRICITY, n, graphs)
        return record

    def verify_constant_curvature_two_connected(
        self, n: int, graphs: Optional[Iterable[Graph]] = None
    ) -> VerificationRecord:
        (record,) = self._sweep_suite(SuiteName.TWO_CONNECTED, n, graphs)
        return record

    def verify_curvature_sandwich(
        self, n: int, graphs: Optional[Iterable[Graph]] = None
    ) -> tuple[VerificationRecord, VerificationRecord]:
        """(curvature-lower, curvature-upper) from one sweep."""
        lower, upper = self._sweep_suite(SuiteName.CURVATURE, n, graphs)
        return lower, upper

    def verify_kirchhoff_sandwich(
        self, n: int, graphs: Optional[Iterable[Graph]] = None
    ) -> tuple[VerificationRecord, VerificationRecord, VerificationRecord, VerificationRecord]:
        """(kirchhoff-upper, kirchhoff-lower, kirchhoff-regular-lower, kirchhoff-regular-upper) from one sweep."""
        upper, lower, regular_lower, regular_upper = self._sweep_suite(SuiteName.KIRCHHOFF, n, graphs)
        return upper, lower, regular_lower, regular_upper

    def verify_closed_forms(self, n_max: int, n_min: int = 3) -> VerificationRecord:
        """C_n and K_n against their closed forms for n_min <= n <= n_max, one record."""
        if n_max < n_min or n_min < 3:
            raise ValidationException(f"Closed-form range needs 3 <= n_min <= n_max, got {n_min}..{n_max}")
        started = time.perf_counter()
        theorem_id, check = CONSTRUCTIONS[SuiteName.CLOSED_FORMS]
        tally = Tally()
        for n in range(n_min, n_max + 1):
            tally.merge(check(n))
        return self._finish(SuiteName.CLOSED_FORMS, theorem_id, n_max, tally, None,
                            PopulationSource.CONSTRUCTION, started)

    def verify_chord_reduction(self, n: int) -> VerificationRecord:
        return self._construct(SuiteName.CHORDS, n)

    # Suites

    def run_suite(
        self,
        n_range: Optional[Sequence[int]],
        suites: Iterable[str | SuiteName],
        stream: Optional[Iterable[Graph]] = None,
    ) -> list[VerificationRecord]:
        return list(self.iter_suite(n_range, suites, stream))

    def iter_suite(
        self,
        n_range: Optional[Sequence[int]],
        suites: Iterable[str | SuiteName],
        stream: Optional[Iterable[Graph]] = None,
    ) -> Iterator[VerificationRecord]:
        """Records suite-major, n-minor, yielded as each (suite, n) completes.

        With a stream the orders come from the stream itself and ``n_range`` is
        ignored; orders a suite does not accept are skipped with a warning.
        """
        resolved = resolve_suites(suites)
        if not resolved:
            return

        if stream is None:
            orders = list(n_range or ())
            if not orders:
                raise ValidationException("verify needs a nonempty n range or a graph6 stream")
            for suite in resolved:
                low = min(orders)
                if low < min_order(suite):
                    raise ValidationException(f"Suite '{suite.value}' needs n >= {min_order(suite)}, got {low}")
            if any(is_sweep(suite) for suite in resolved):
                for n in orders:
                    check_cap(n, self.settings.cap)
                expensive = [n for n in orders if n >= DEFAULT_ENUMERATION_CAP]
                if expensive:
                    logger.warning("Labeled enumeration at these orders is very expensive", orders=expensive)
            by_order: dict[int, list[Graph]] = {}
        else:
            if n_range:
                logger.warning("Graph stream supplied, ignoring the n range", n_range=list(n_range))
            by_order = defaultdict(list)
            for graph in stream:
                by_order[graph.n].append(graph)
            orders = sorted(by_order)
            logger.info("Graph stream loaded", graphs=sum(map(len, by_order.values())), orders=orders)

        for suite in resolved:
            for n in orders:
                if n < min_order(suite):
                    logger.warning("Skipping order below suite minimum", suite=suite.value, n=n)
                    continue
                if is_sweep(suite):
                    yield from self._sweep_suite(suite, n, by_order[n] if stream is not None else None)
                else:
                    yield self._construct(suite, n)

    # Internals

    def _sweep_suite(
        self, suite: SuiteName, n: int, graphs: Optional[Iterable[Graph]] = None
    ) -> list[VerificationRecord]:
        started = time.perf_counter()
        tolerance = self.settings.screen_tolerance
        batch_size = self.settings.screen_batch_size
        checks = build_checks(suite, n, tolerance)

        if graphs is not None:
            source = PopulationSource.STREAM
            stats = run_sweep(graphs, checks, self.exact_only, batch_size)
        else:
            source = PopulationSource.ENUMERATION
            check_cap(n, self.settings.cap)
            logger.info("Sweep started", suite=suite.value, n=n, masks=mask_count(n), jobs=self.jobs)
            stats = self._enumerate_and_sweep(suite, n, checks)

        GRAPHS_SCREENED.labels(suite=suite.value).inc(stats.screened)
        EXACT_RECHECKS.labels(suite=suite.value).inc(stats.exact)
        logger.debug(
            "Sweep counts",
            suite=suite.value,
            n=n,
            graphs=stats.graphs,
            screened=stats.screened,
            exact=stats.exact,
        )
        return [
            self._finish(suite, check.theorem_id, n, check.tally, check.extremal_value, source, started)
            for check in checks
        ]

    def _enumerate_and_sweep(self, suite: SuiteName, n: int, checks: list[TheoremCheck]) -> SweepStats:
        tolerance = self.settings.screen_tolerance
        batch_size = self.settings.screen_batch_size
        if self.jobs == 1:
            graphs = enumerate_range(n, 0, mask_count(n), GraphFilter.connected())
            return run_sweep(graphs, checks, self.exact_only, batch_size)

        ranges = chunk_ranges(n, self.jobs * _CHUNKS_PER_JOB)
        stats = SweepStats()
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            futures = [
                executor.submit(_sweep_chunk, suite.value, n, start, stop, self.exact_only, batch_size, tolerance)
                for start, stop in ranges
            ]
            # merged in chunk order so the result does not depend on scheduling
            for future in futures:
                tallies, chunk_stats = future.result()
                for check, tally in zip(checks, tallies):
                    check.tally.merge(tally)
                stats.merge(chunk_stats)
        return stats

    def _construct(self, suite: SuiteName, n: int) -> VerificationRecord:
        if n < min_order(suite):
            raise ValidationException(f"Suite '{suite.value}' needs n >= {min_order(suite)}, got {n}")
        started = time.perf_counter()
        theorem_id, check = CONSTRUCTIONS[suite]
        tally = check(n)
        extremal = None
        if suite is SuiteName.CHORDS:
            extremal = Fraction(n * n - 1, 6)
        return self._finish(suite, theorem_id, n, tally, extremal, PopulationSource.CONSTRUCTION, started)

    def _finish(
        self,
        suite: SuiteName,
        theorem_id: str,
        n: int,
        tally: Tally,
        extremal_value: Optional[Fraction],
        source: PopulationSource,
        started: float,
    ) -> VerificationRecord:
        elapsed = time.perf_counter() - started
        record = VerificationRecord(
            theorem_id=theorem_id,
            n=n,
            population=tally.population,
            population_source=source,
            violations=tally.violations,
            equality_witnesses=tally.witnesses,
            extremal_value=extremal_value,
            elapsed=elapsed,
            runner_up_value=tally.runner_up_value,
            runner_up_witnesses=tally.runner_up_witnesses,
            regular_graphs=tally.regular_graphs,
        )
        SWEEP_SECONDS.labels(suite=suite.value).observe(elapsed)
        if record.violations:
            VIOLATIONS.labels(theorem=theorem_id).inc(len(record.violations))
            logger.error(
                "Violations found",
                theorem=theorem_id,
                n=n,
                count=len(record.violations),
                first=record.violations[0],
            )
        logger.info(
            "Suite finished",
            suite=suite.value,
            theorem=theorem_id,
            n=n,
            population=record.population,
            witnesses=len(record.equality_witnesses),
            passed=record.passed,
            elapsed=round(elapsed, 3),
        )
        return record
