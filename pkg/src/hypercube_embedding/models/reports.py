"""
Report models for embeddings, intersections, necessary conditions and
searches, plus the combined report document emitted by the command line.

Every numeric field is an exact integer (or an exact fraction rendered as
text) apart from the rounded log10 of a search space. No timestamps, so
documents are byte-stable across runs.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, List, Optional

from ..utils.helpers import SpaceSize
from .enums import IntersectionClass, SearchMode

if TYPE_CHECKING:
    from ..core.embedding import RotationSystem


def _fraction_value(value: Optional[Fraction]):
    if value is None:
        return None
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass
class FaceSummary:
    """One traced face: its length and whether it is a Hamiltonian cycle."""

    index: int
    length: int
    hamiltonian: bool
    union_index: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {'index': self.index, 'length': self.length, 'hamiltonian': self.hamiltonian}
        if self.union_index is not None:
            result['union'] = self.union_index
        return result


@dataclass
class EmbeddingReport:
    """Counts, genus and per-face Hamiltonicity of a traced embedding."""

    graph: str
    vertex_count: int
    edge_count: int
    face_count: int
    genus: int
    faces: List[FaceSummary] = field(default_factory=list)
    faces_match_unions: Optional[bool] = None

    @property
    def is_hamiltonian_embedding(self) -> bool:
        return bool(self.faces) and all(face.hamiltonian for face in self.faces)

    @property
    def is_verified(self) -> bool:
        """Hamiltonian, and bijective with the matching unions when those were supplied."""
        return self.is_hamiltonian_embedding and self.faces_match_unions is not False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'graph': self.graph,
            'v': self.vertex_count,
            'e': self.edge_count,
            'f': self.face_count,
            'genus': self.genus,
            'is_hamiltonian_embedding': self.is_hamiltonian_embedding,
            'faces_match_unions': self.faces_match_unions,
            'faces': [face.to_dict() for face in self.faces],
        }


@dataclass
class NecessaryConditionReport:
    """Evaluation of the necessary conditions for a Hamiltonian embedding of a d-regular graph."""

    order: int
    degree: int
    congruence_holds: bool
    clause_results: Dict[str, bool]
    implied_face_count: int
    implied_genus: Optional[Fraction]

    @property
    def genus_is_integer(self) -> bool:
        return self.implied_genus is not None and self.implied_genus.denominator == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'order': self.order,
            'degree': self.degree,
            'congruence_holds': self.congruence_holds,
            'clauses': dict(self.clause_results),
            'implied_face_count': self.implied_face_count,
            'implied_genus': _fraction_value(self.implied_genus),
        }

    def get_summary_text(self) -> str:
        verdict = "holds" if self.congruence_holds else "fails"
        genus = _fraction_value(self.implied_genus)
        return (f"order={self.order} degree={self.degree}: congruence {verdict}, "
                f"implied faces {self.implied_face_count}, implied genus {genus}")


@dataclass
class PairIntersection:
    """Common edges of two faces."""

    first: int
    second: int
    size: int
    classification: IntersectionClass
    shares_adjacent_edges: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'faces': [self.first, self.second],
            'size': self.size,
            'class': str(self.classification),
            'shares_adjacent_edges': self.shares_adjacent_edges,
        }


@dataclass
class IntersectionProfile:
    """Pairwise intersections of all faces of an embedding."""

    face_count: int
    vertex_count: int
    pairs: List[PairIntersection] = field(default_factory=list)
    degenerate: bool = False

    def nonempty(self) -> List[PairIntersection]:
        return [p for p in self.pairs if p.size > 0]

    @property
    def all_matching_or_empty(self) -> bool:
        return all(p.classification != IntersectionClass.OTHER for p in self.pairs)

    @property
    def any_adjacent_sharing(self) -> bool:
        return any(p.shares_adjacent_edges for p in self.pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degenerate': self.degenerate,
            'pairs': [p.to_dict() for p in self.nonempty()],
            'empty_pairs': sum(1 for p in self.pairs if p.size == 0),
        }


@dataclass
class IntersectionShape:
    """Shape of the weighted intersection graph."""

    kind: str
    node_count: int
    edge_count: int
    uniform_weight: Optional[int]

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'nodes': self.node_count,
            'edges': self.edge_count,
            'uniform_weight': self.uniform_weight,
        }


@dataclass
class SearchOutcome:
    """Result of an exhaustive or random rotation-system search."""

    graph: str
    mode: SearchMode
    candidates_examined: int
    space_size: Optional[int]
    space_log10: float = 0.0
    embeddings_found: List['RotationSystem'] = field(default_factory=list)
    hits: int = 0
    max_hamiltonian_faces: int = 0
    seed: Optional[int] = None
    budget: Optional[int] = None

    @property
    def found(self) -> int:
        return len(self.embeddings_found)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'graph': self.graph,
            'mode': str(self.mode),
            'candidates': self.candidates_examined,
            'space_size': self.space_size,
            'space_log10': self.space_log10,
            'found': self.found,
            'hits': self.hits,
            'max_hamiltonian_faces': self.max_hamiltonian_faces,
            'embeddings': [[list(rot.rotation(v)) for v in range(rot.vertex_count)]
                           for rot in self.embeddings_found],
        }
        if self.mode == SearchMode.RANDOM:
            result['seed'] = self.seed
            result['budget'] = self.budget
        return result

    @property
    def space_text(self) -> str:
        """Exact space size, or its order of magnitude when too large to print."""
        return str(SpaceSize(self.space_size, self.space_log10))

    def get_summary_text(self) -> str:
        return f"candidates={self.candidates_examined} found={self.found}"


@dataclass
class ReportDocument:
    """The structured report emitted by ``verify``, ``analyze``, ``necessary`` and ``search``."""

    graph: Optional[str] = None
    embedding: Optional[EmbeddingReport] = None
    intersections: Optional[IntersectionProfile] = None
    intersection_graph_shape: Optional[IntersectionShape] = None
    consistency: Dict[str, bool] = field(default_factory=dict)
    conditions: Optional[NecessaryConditionReport] = None
    search: Optional[SearchOutcome] = None
    verification: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        """Schema-stable rendering: every key is always present."""
        emb = self.embedding
        return {
            'graph': self.graph,
            'v': emb.vertex_count if emb else None,
            'e': emb.edge_count if emb else None,
            'f': emb.face_count if emb else None,
            'genus': emb.genus if emb else None,
            'is_hamiltonian_embedding': emb.is_hamiltonian_embedding if emb else None,
            'faces': [face.to_dict() for face in emb.faces] if emb else [],
            'intersections': self.intersections.to_dict() if self.intersections else None,
            'intersection_graph_shape': (self.intersection_graph_shape.to_dict()
                                         if self.intersection_graph_shape else None),
            'consistency': dict(self.consistency),
            'conditions': self.conditions.to_dict() if self.conditions else None,
            'search': self.search.to_dict() if self.search else None,
            'verification': self.verification.to_dict() if self.verification else None,
        }
