"""
Checks that no edge belongs to two of the claimed matchings.
"""
import numpy as np

from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class MatchingsDisjointValidator(BaseClauseValidator):
    """Pairwise edge-disjointness of the matching blocks."""

    def get_clause_type(self) -> ClauseType:
        return ClauseType.MATCHINGS_DISJOINT

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_matchings

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        count = len(context.matching_edges)
        codes = [np.unique(context.edge_codes(i)) for i in range(count)]
        if count < 2:
            return self._passed(count)

        owners = np.concatenate([np.full(c.size, i, dtype=np.int64) for i, c in enumerate(codes)])
        merged = np.concatenate(codes)
        order = np.argsort(merged, kind="stable")
        ordered = merged[order]
        repeats = np.flatnonzero(ordered[1:] == ordered[:-1])
        if repeats.size == 0:
            return self._passed(count)

        j = int(repeats[0])
        lo, hi = divmod(int(ordered[j]), context.graph.vertex_count)
        first, second = int(owners[order[j]]) + 1, int(owners[order[j + 1]]) + 1
        return self._failed(
            f"edge {lo}-{hi} lies in matchings {first} and {second}",
            checked=count, edge=[lo, hi], matchings=[first, second])
