"""
Checks that every cyclically consecutive pair of matchings forms one
Hamiltonian cycle.
"""
from ..core.base_validator import BaseClauseValidator, EmbeddingContext
from ..core.exceptions import SharedEdgeError
from ..core.matching import union_cycles
from ..models.enums import ClauseType
from ..models.results import ClauseResult


class UnionsHamiltonianValidator(BaseClauseValidator):
    """M_i + M_{i+1} is a single cycle through all vertices, indices mod k."""

    prerequisites = (ClauseType.MATCHINGS_DISJOINT, ClauseType.MATCHINGS_PERFECT)

    def get_clause_type(self) -> ClauseType:
        return ClauseType.UNIONS_HAMILTONIAN

    def is_applicable(self, context: EmbeddingContext) -> bool:
        return context.has_matchings

    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        matchings = context.matchings()
        count = len(matchings)
        if count < 2:
            return self._failed(f"need at least two matchings, got {count}", checked=count)

        for i in range(count):
            j = (i + 1) % count
            try:
                cover = union_cycles(context.graph, matchings[i], matchings[j])
            except SharedEdgeError as e:
                return self._failed(f"union {i + 1}+{j + 1}: {e}", checked=i, union=i + 1)
            if len(cover) != 1:
                lengths = sorted(cover.lengths)
                return self._failed(
                    f"union {i + 1}+{j + 1} splits into {len(cover)} cycles",
                    checked=i, union=i + 1, cycle_lengths=lengths[:8])
        return self._passed(count)
