"""
Verification orchestration engine.
Prepares shared derived data once, then runs every clause validator and
collects their results in canonical order.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from ..models.config import FrameworkConfig
from ..models.enums import ClauseType
from ..models.results import ClauseResult, VerificationSummary
from ..utils.logger import get_logger
from ..utils.metrics import MetricsCollector
from ..validators.validator_factory import ValidatorFactory
from .base_validator import BaseClauseValidator, EmbeddingContext, partner_from_edges
from .embedding import RotationSystem, trace_faces
from .exceptions import InvalidRotationError
from .matching import Graph, PerfectMatching


class VerificationEngine:
    """Runs the verification clauses over an :class:`EmbeddingContext`."""

    def __init__(self, config: Optional[FrameworkConfig] = None,
                 validators: Optional[List[BaseClauseValidator]] = None):
        self.config = config or FrameworkConfig()
        self.logger = get_logger("VerificationEngine")
        self.metrics = MetricsCollector()
        self.validators = validators or ValidatorFactory.create_all()

    def prepare(self, context: EmbeddingContext) -> EmbeddingContext:
        """Trace faces and build partner maps, once, before any clause runs."""
        graph = context.graph
        if context.has_matchings and not context.partner_maps:
            context.partner_maps = [partner_from_edges(graph.vertex_count, edges)
                                    for edges in context.matching_edges]
        if context.has_rotation and context.faces is None and context.trace_error is None:
            try:
                context.faces = trace_faces(graph, context.rotation)
            except InvalidRotationError as e:
                context.trace_error = str(e)
                self.logger.warning(f"Rotation system is invalid: {e}")
        return context

    def run(self, context: EmbeddingContext) -> VerificationSummary:
        """
        Evaluate all clauses.

        Clauses run in waves: a clause starts once all its prerequisites have
        a result. Each wave runs in a thread pool when parallel execution is
        configured.

        Returns:
            VerificationSummary ordered canonically
        """
        self.metrics.start()
        start_time = time.perf_counter()
        self.prepare(context)

        completed: Dict[ClauseType, ClauseResult] = {}
        pending = list(self.validators)
        while pending:
            ready = [v for v in pending
                     if all(p in completed or not self._is_registered(p) for p in v.prerequisites)]
            if not ready:
                ready = pending[:1]
            for result in self._run_wave(ready, context, completed):
                completed[result.clause] = result
                self.metrics.record_clause(result.status.value)
            pending = [v for v in pending if v not in ready]

        self.metrics.end()
        summary = VerificationSummary.from_results(list(completed.values()),
                                                   time.perf_counter() - start_time)
        self.logger.info(summary.get_summary_text())
        return summary

    def _is_registered(self, clause: ClauseType) -> bool:
        return any(v.get_clause_type() == clause for v in self.validators)

    def _run_wave(self, wave: List[BaseClauseValidator], context: EmbeddingContext,
                  completed: Dict[ClauseType, ClauseResult]) -> List[ClauseResult]:
        settings = self.config.settings
        if settings.parallel_execution and len(wave) > 1:
            with ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
                return list(executor.map(lambda v: v.check(context, completed), wave))
        return [v.check(context, completed) for v in wave]


def verify_embedding(graph: Graph, matchings: Optional[Sequence[PerfectMatching]] = None,
                     rotation: Optional[RotationSystem] = None,
                     config: Optional[FrameworkConfig] = None) -> VerificationSummary:
    """Convenience function: verify matchings and/or a rotation system on ``graph``."""
    context = EmbeddingContext.from_matchings(graph, matchings, rotation)
    return VerificationEngine(config).run(context)
