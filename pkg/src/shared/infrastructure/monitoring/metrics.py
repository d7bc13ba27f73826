# src/shared/infrastructure/monitoring/metrics.py
"""Prometheus metrics for verification sweeps."""

import structlog
from prometheus_client import Counter, Histogram, start_http_server

from src.config import Settings

logger = structlog.get_logger()

GRAPHS_SCREENED = Counter(
    "ohmcurve_graphs_screened_total",
    "Graphs passed through the float screen",
    ["suite"],
)
EXACT_RECHECKS = Counter(
    "ohmcurve_exact_rechecks_total",
    "Graphs recomputed in exact arithmetic",
    ["suite"],
)
VIOLATIONS = Counter(
    "ohmcurve_violations_total",
    "Graphs reported as violating a checked statement",
    ["theorem"],
)
SWEEP_SECONDS = Histogram(
    "ohmcurve_sweep_seconds",
    "Wall time of one (suite, n) sweep",
    ["suite"],
    buckets=(0.01, 0.1, 1.0, 10.0, 60.0, 300.0, 1800.0),
)

_server_started = False


def start_metrics_server(settings: Settings) -> bool:
    """Start the exporter once, when enabled. Returns whether it is running."""
    global _server_started
    if not settings.prometheus_enabled:
        return False
    if not _server_started:
        start_http_server(settings.prometheus_port)
        _server_started = True
        logger.info("Prometheus exporter started", port=settings.prometheus_port)
    return True
