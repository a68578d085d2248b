"""
Abstract base class for verification clauses, and the context they check.
Defines the contract that all clause validators must follow.
"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..models.enums import ClauseStatus, ClauseType
from ..models.results import ClauseResult
from ..utils.logger import get_logger
from .embedding import FaceSet, RotationSystem
from .matching import Graph, PerfectMatching


def matching_edge_array(matching: PerfectMatching) -> np.ndarray:
    """``(k, 2)`` array of the ``(lo, hi)`` edges of a matching."""
    v = np.arange(matching.vertex_count, dtype=np.int64)
    lo = v[v < matching.partner]
    return np.column_stack([lo, matching.partner[lo]])


def partner_from_edges(vertex_count: int, edges: np.ndarray) -> Optional[PerfectMatching]:
    """
    Partner map of an edge block, or None when a vertex is covered twice.
    Uncovered vertices keep partner -1.
    """
    flat = edges.reshape(-1)
    if np.any(flat < 0) or np.any(flat >= vertex_count):
        return None
    if np.unique(flat).size != flat.size:
        return None
    partner = np.full(vertex_count, -1, dtype=np.int64)
    partner[edges[:, 0]] = edges[:, 1]
    partner[edges[:, 1]] = edges[:, 0]
    return PerfectMatching(partner)


@dataclass
class EmbeddingContext:
    """
    Everything the clauses look at: the host graph, the claimed matchings as
    raw edge blocks, and the rotation system. Derived data is filled in by
    the engine before any clause runs.
    """

    graph: Graph
    matching_edges: Optional[List[np.ndarray]] = None
    rotation: Optional[RotationSystem] = None

    faces: Optional[FaceSet] = None
    trace_error: Optional[str] = None
    partner_maps: List[Optional[PerfectMatching]] = field(default_factory=list)

    @classmethod
    def from_matchings(cls, graph: Graph, matchings: Optional[Sequence[PerfectMatching]] = None,
                       rotation: Optional[RotationSystem] = None) -> 'EmbeddingContext':
        edges = None if matchings is None else [matching_edge_array(m) for m in matchings]
        return cls(graph=graph, matching_edges=edges, rotation=rotation)

    @classmethod
    def from_edge_blocks(cls, graph: Graph, blocks: Sequence[Sequence[Tuple[int, int]]],
                         rotation: Optional[RotationSystem] = None) -> 'EmbeddingContext':
        edges = [np.asarray(block, dtype=np.int64).reshape(-1, 2) for block in blocks]
        return cls(graph=graph, matching_edges=edges, rotation=rotation)

    @property
    def has_matchings(self) -> bool:
        return self.matching_edges is not None

    @property
    def has_rotation(self) -> bool:
        return self.rotation is not None

    def matchings(self) -> List[PerfectMatching]:
        """Partner maps of all blocks; only meaningful once matchings_perfect passed."""
        return [m for m in self.partner_maps if m is not None]

    def edge_codes(self, index: int) -> np.ndarray:
        """``lo * V + hi`` codes of block ``index``."""
        edges = self.matching_edges[index]
        count = self.graph.vertex_count
        return np.minimum(edges[:, 0], edges[:, 1]) * count + np.maximum(edges[:, 0], edges[:, 1])


class BaseClauseValidator(ABC):
    """Abstract base class for all verification clauses."""

    # Clauses that must have PASSED before this one is meaningful
    prerequisites: Tuple[ClauseType, ...] = ()

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        self.logger = get_logger(f"{self.__class__.__name__}")

    @abstractmethod
    def get_clause_type(self) -> ClauseType:
        pass

    @abstractmethod
    def _execute_check(self, context: EmbeddingContext) -> ClauseResult:
        """
        Evaluate the clause.

        Returns:
            ClauseResult, PASSED or FAILED with a witness
        """
        pass

    def is_applicable(self, context: EmbeddingContext) -> bool:
        """Whether the context carries the inputs this clause needs."""
        return True

    def check(self, context: EmbeddingContext,
              completed: Optional[Dict[ClauseType, ClauseResult]] = None) -> ClauseResult:
        """
        Run the clause with prerequisite handling, error handling and timing.

        Args:
            context: What to verify
            completed: Results of clauses already evaluated

        Returns:
            ClauseResult with the clause outcome
        """
        completed = completed or {}
        clause = self.get_clause_type()

        if not self.is_applicable(context):
            return self._create_result(ClauseStatus.SKIPPED, message="input not supplied")
        blocked = [p for p in self.prerequisites
                   if p in completed and not completed[p].is_successful()]
        if blocked:
            return self._create_result(
                ClauseStatus.SKIPPED,
                message=f"requires {', '.join(str(p) for p in blocked)}")

        start_time = time.perf_counter()
        try:
            result = self._execute_check(context)
            result.execution_time_seconds = time.perf_counter() - start_time
            if result.is_failure():
                self.logger.warning(f"Clause {clause} failed: {result.message}")
            else:
                self.logger.debug(f"Clause {clause}: {result.status} "
                                  f"in {result.execution_time_seconds:.3f}s")
            return result

        except Exception as e:
            self.logger.error(f"Clause {clause} raised: {str(e)}", exc_info=True)
            return self._create_result(
                ClauseStatus.ERROR,
                execution_time_seconds=time.perf_counter() - start_time,
                error_message=str(e),
                error_details={'exception_type': type(e).__name__},
            )

    def _create_result(self, status: ClauseStatus, **kwargs) -> ClauseResult:
        return ClauseResult(clause=self.get_clause_type(), status=status, **kwargs)

    def _passed(self, checked: int) -> ClauseResult:
        return self._create_result(ClauseStatus.PASSED, checked=checked)

    def _failed(self, message: str, checked: int = 0, **witness) -> ClauseResult:
        return self._create_result(ClauseStatus.FAILED, message=message,
                                   checked=checked, witness=witness or None)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(clause='{self.get_clause_type()}')"
