"""
Metrics collection and tracking utilities.
"""
import time
from typing import Any, Dict

from .helpers import format_duration


class MetricsCollector:
    """Collects and tracks execution metrics of constructions and searches."""

    def __init__(self):
        """Initialize metrics collector."""
        self.metrics: Dict[str, Any] = {
            'start_time': None,
            'end_time': None,
            'duration_seconds': 0.0,
            'levels_built': 0,
            'level_seconds': {},
            'candidates_examined': 0,
            'embeddings_found': 0,
            'clauses_checked': 0,
            'clauses_failed': 0,
        }

    def start(self) -> None:
        """Start tracking metrics."""
        self.metrics['start_time'] = time.perf_counter()

    def end(self) -> None:
        """End tracking metrics."""
        self.metrics['end_time'] = time.perf_counter()
        if self.metrics['start_time'] is not None:
            self.metrics['duration_seconds'] = self.metrics['end_time'] - self.metrics['start_time']

    def record_level(self, dimension: int, seconds: float) -> None:
        """Record one completed doubling level."""
        self.metrics['levels_built'] += 1
        self.metrics['level_seconds'][dimension] = seconds

    def record_candidates(self, count: int, found: int = 0) -> None:
        """Record examined search candidates."""
        self.metrics['candidates_examined'] += count
        self.metrics['embeddings_found'] += found

    def record_clause(self, status: str) -> None:
        """Record a verification clause outcome."""
        self.metrics['clauses_checked'] += 1
        if status.upper() in ('FAILED', 'ERROR'):
            self.metrics['clauses_failed'] += 1

    def get_metrics(self) -> Dict[str, Any]:
        """Get a copy of the collected metrics."""
        metrics_copy = self.metrics.copy()
        metrics_copy['level_seconds'] = dict(self.metrics['level_seconds'])
        return metrics_copy

    def get_summary(self) -> str:
        """
        Get human-readable metrics summary.

        Returns:
            Formatted summary string
        """
        levels = ", ".join(
            f"Q{dim}={format_duration(sec)}"
            for dim, sec in sorted(self.metrics['level_seconds'].items())
        )
        return (
            f"Metrics Summary:\n"
            f"  Duration: {format_duration(self.metrics['duration_seconds'])}\n"
            f"  Levels: {self.metrics['levels_built']} built ({levels or 'none'})\n"
            f"  Candidates: {self.metrics['candidates_examined']} examined, "
            f"{self.metrics['embeddings_found']} embeddings\n"
            f"  Clauses: {self.metrics['clauses_checked']} checked, "
            f"{self.metrics['clauses_failed']} failed"
        )
