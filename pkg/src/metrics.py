"""
Prometheus metrics for tverberg-lab.
Tracks searches, enumerated families, LP calls, unavoidability checks and
theorem trials. Nothing here feeds back into any JSON output.
"""
from prometheus_client import CollectorRegistry, Counter, Gauge, Histogram, write_to_textfile

from .config import settings

# Create a custom registry to avoid conflicts
registry = CollectorRegistry()

searches_total = Counter(
    'tverberg_searches_total',
    'Total partition searches',
    ['mode', 'status'],  # mode: partitions, bounded; status: SearchStatus value
    registry=registry
)

families_enumerated_total = Counter(
    'tverberg_families_enumerated_total',
    'Candidate face families enumerated',
    ['mode'],
    registry=registry
)

lp_calls_total = Counter(
    'tverberg_lp_calls_total',
    'Exact hull-intersection feasibility problems solved',
    registry=registry
)

search_duration_seconds = Histogram(
    'tverberg_search_duration_seconds',
    'Wall time per search in seconds',
    registry=registry
)

unavoidability_checks_total = Counter(
    'tverberg_unavoidability_checks_total',
    'Unavoidability decisions',
    ['mode', 'result'],  # result: unavoidable, avoidable
    registry=registry
)

theorem_trials_total = Counter(
    'tverberg_theorem_trials_total',
    'Theorem instance trials',
    ['theorem_id', 'outcome'],
    registry=registry
)

app_info = Gauge(
    'tverberg_app_info',
    'Application information',
    ['version'],
    registry=registry
)


class MetricsCollector:
    """Helper class for collecting metrics throughout the application."""

    @staticmethod
    def record_search(mode: str, status: str, families: int, lp_calls: int, duration: float):
        """
        Record one finished search.

        Args:
            mode: completeness mode of the enumeration
            status: outcome status value
            families: number of candidate families enumerated
            lp_calls: number of feasibility problems solved
            duration: wall time in seconds
        """
        if not settings.enable_metrics:
            return
        searches_total.labels(mode=mode, status=status).inc()
        families_enumerated_total.labels(mode=mode).inc(families)
        lp_calls_total.inc(lp_calls)
        search_duration_seconds.observe(duration)

    @staticmethod
    def record_unavoidability(mode: str, unavoidable: bool):
        if not settings.enable_metrics:
            return
        result = "unavoidable" if unavoidable else "avoidable"
        unavoidability_checks_total.labels(mode=mode, result=result).inc()

    @staticmethod
    def record_trial(theorem_id: str, outcome: str):
        if not settings.enable_metrics:
            return
        theorem_trials_total.labels(theorem_id=theorem_id, outcome=outcome).inc()

    @staticmethod
    def set_app_version(version: str):
        app_info.labels(version=version).set(1)


def write_metrics(path: str) -> None:
    """Write the registry in text exposition format."""
    write_to_textfile(path, registry)
