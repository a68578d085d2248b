"""
Checks that every claimed matching is a perfect matching of the graph.
"""
import numpy as np

from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..core.matching import validate_matching
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class MatchingsPerfectValidator(BaseClauseValidator):
    """Every block covers each vertex exactly once, along edges of the graph."""

    def get_clause_type(self) -> ClauseType:
        return ClauseType.MATCHINGS_PERFECT

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_matchings

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        graph = context.graph
        count = len(context.matching_edges)
        for index, edges in enumerate(context.matching_edges):
            label = index + 1
            partner = context.partner_maps[index] if index < len(context.partner_maps) else None
            if partner is None:
                flat = edges.reshape(-1)
                outside = flat[(flat < 0) | (flat >= graph.vertex_count)]
                if outside.size:
                    v = int(outside[0])
                    return self._failed(f"matching {label}: vertex {v} out of range",
                                        checked=count, matching=label, vertex=v)
                twice = np.flatnonzero(np.bincount(flat, minlength=graph.vertex_count) > 1)
                v = int(twice[0])
                return self._failed(f"matching {label}: vertex {v} is covered twice",
                                    checked=count, matching=label, vertex=v)

            uncovered = np.flatnonzero(partner.partner < 0)
            if uncovered.size:
                v = int(uncovered[0])
                return self._failed(f"matching {label}: vertex {v} is not covered",
                                    checked=count, matching=label, vertex=v)

            report = validate_matching(graph, partner)
            if not report:
                return self._failed(f"matching {label}: vertex {report.vertex}: {report.reason}",
                                    checked=count, matching=label, vertex=report.vertex)
        return self._passed(count)
