"""
Checks that the claimed matchings together contain every edge of the graph.
"""
import numpy as np

from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class MatchingsCoverEdgesValidator(BaseClauseValidator):
    """The union of the blocks is exactly the edge set of the graph."""

    def get_clause_type(self) -> ClauseType:
        return ClauseType.MATCHINGS_COVER_EDGES

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_matchings

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        graph = context.graph
        count = len(context.matching_edges)
        if count == 0:
            return self._failed("no matchings supplied")

        covered = np.unique(np.concatenate([context.edge_codes(i) for i in range(count)]))
        edges = np.fromiter((u * graph.vertex_count + v for u, v in graph.edges()),
                            dtype=np.int64, count=graph.edge_count)
        missing = np.setdiff1d(edges, covered)
        if missing.size:
            lo, hi = divmod(int(missing[0]), graph.vertex_count)
            return self._failed(f"{missing.size} edges are in no matching, first {lo}-{hi}",
                                checked=count, edge=[lo, hi], missing=int(missing.size))
        extra = np.setdiff1d(covered, edges)
        if extra.size:
            lo, hi = divmod(int(extra[0]), graph.vertex_count)
            return self._failed(f"{lo}-{hi} is not an edge of {graph.describe()}",
                                checked=count, edge=[lo, hi])
        return self._passed(count)
