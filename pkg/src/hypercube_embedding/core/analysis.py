"""
Necessary conditions for Hamiltonian embeddings of regular graphs, face
intersection structure, and exhaustive / random rotation-system search.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..models.enums import IntersectionClass, SearchMode
from ..models.reports import (IntersectionProfile, IntersectionShape, NecessaryConditionReport,
                              PairIntersection, SearchOutcome)
from ..utils.helpers import rotation_space
from ..utils.logger import get_logger
from ..utils.metrics import MetricsCollector
from .base_validator import partner_from_edges
from .embedding import FaceSet, RotationSystem, hamiltonian_face_count, trace_faces
from .exceptions import DomainError, ResourceBoundError
from .matching import Graph, validate_matching

logger = get_logger("analysis")

ProgressCallback = Callable[[int, int], None]

DEFAULT_EXHAUSTIVE_BUDGET = 10_000_000


def necessary_conditions(order: int, degree: int) -> NecessaryConditionReport:
    """
    Evaluate the conditions a d-regular graph of order n must meet to have
    an orientable Hamiltonian embedding (f = d faces, e = nd/2 edges).

    The verdict is the congruence ``nd = 2(n + d) (mod 4)``. The three
    published clauses are reported as stated; the last one disagrees with
    the congruence when n and d are both even.
    """
    if order < 3 or not 1 <= degree < order:
        raise DomainError(f"need order >= 3 and 1 <= degree < order, got ({order}, {degree})",
                          value=(order, degree))
    n, d = order, degree
    congruence = (n * d) % 4 == (2 * (n + d)) % 4

    clauses = {
        'one_of_order_degree_even': n % 2 == 0 or d % 2 == 0,
        'mixed_parity_has_two_mod_four': (n % 2 == d % 2) or n % 4 == 2 or d % 4 == 2,
        'both_even_product_differs_from_sum': not (n % 2 == 0 and d % 2 == 0)
                                               or (n * d) % 4 != (n + d) % 4,
    }

    genus = None
    if (n * d) % 2 == 0:
        genus = Fraction(2 - n + (n * d) // 2 - d, 2)
    return NecessaryConditionReport(
        order=n,
        degree=d,
        congruence_holds=congruence,
        clause_results=clauses,
        implied_face_count=d,
        implied_genus=genus,
    )


def _face_edge_codes(faces: FaceSet) -> List[np.ndarray]:
    return [np.unique(walk.edge_codes(faces.vertex_count)) for walk in faces]


def intersection_profile(g: Graph, faces: FaceSet) -> IntersectionProfile:
    """
    Common edges of every pair of faces, classified as empty, a perfect
    matching of ``g``, or other.

    Two faces with identical edge sets (Q_2) mark the profile degenerate.
    """
    count = g.vertex_count
    codes = _face_edge_codes(faces)
    pairs = []
    degenerate = False
    for i, j in itertools.combinations(range(faces.face_count), 2):
        common = np.intersect1d(codes[i], codes[j], assume_unique=True)
        if np.array_equal(codes[i], codes[j]):
            degenerate = True

        lo, hi = np.divmod(common, count)
        endpoints = np.concatenate([lo, hi])
        adjacent = bool(endpoints.size) and bool(np.any(np.bincount(endpoints) > 1))

        if common.size == 0:
            kind = IntersectionClass.EMPTY
        elif 2 * common.size == count and _is_perfect(g, np.column_stack([lo, hi])):
            kind = IntersectionClass.PERFECT_MATCHING
        else:
            kind = IntersectionClass.OTHER
        pairs.append(PairIntersection(i, j, int(common.size), kind, adjacent))

    return IntersectionProfile(face_count=faces.face_count, vertex_count=count,
                               pairs=pairs, degenerate=degenerate)


def _is_perfect(g: Graph, edges: np.ndarray) -> bool:
    matching = partner_from_edges(g.vertex_count, edges)
    return matching is not None and bool(validate_matching(g, matching))


@dataclass
class WeightedIntersectionGraph:
    """Faces as nodes; an edge of weight |C_i & C_j| for every intersecting pair."""

    graph: nx.Graph
    shape: IntersectionShape

    def weights(self) -> Dict[Tuple[int, int], int]:
        return {(min(u, v), max(u, v)): w for u, v, w in self.graph.edges(data="weight")}


def _shape_of(graph: nx.Graph) -> IntersectionShape:
    nodes, edges = graph.number_of_nodes(), graph.number_of_edges()
    weights = {w for _, _, w in graph.edges(data="weight")}
    uniform = weights.pop() if len(weights) == 1 else None

    if edges == 0:
        kind = "empty"
    elif nodes == 2 and edges == 1:
        kind = "edge"
    elif (nodes >= 3 and edges == nodes and nx.is_connected(graph)
          and all(deg == 2 for _, deg in graph.degree())):
        kind = "cycle"
    else:
        kind = "other"
    return IntersectionShape(kind=kind, node_count=nodes, edge_count=edges, uniform_weight=uniform)


def intersection_graph(profile: IntersectionProfile) -> WeightedIntersectionGraph:
    """Build the weighted intersection graph and describe its shape."""
    graph = nx.Graph()
    graph.add_nodes_from(range(profile.face_count))
    for pair in profile.nonempty():
        graph.add_edge(pair.first, pair.second, weight=pair.size)
    return WeightedIntersectionGraph(graph=graph, shape=_shape_of(graph))


def intersection_consistency(profile: IntersectionProfile,
                           shape: IntersectionShape) -> Dict[str, bool]:
    """
    Booleans for the intersection predictions on hypercube embeddings:
    every intersection is a perfect matching or empty, the intersection
    graph is one cycle with every weight half the vertex count, and no two
    faces share adjacent edges.
    """
    return {
        'degenerate': profile.degenerate,
        'intersections_matching_or_empty': profile.all_matching_or_empty,
        'intersection_graph_is_uniform_cycle': (shape.is_cycle and shape.node_count == profile.face_count
                                                and shape.uniform_weight == profile.vertex_count // 2),
        'no_adjacent_sharing': not profile.any_adjacent_sharing,
    }


def _hamiltonian_faces(g: Graph, rot: RotationSystem) -> Tuple[int, int]:
    faces = trace_faces(g, rot, validate=False)
    return hamiltonian_face_count(g, faces), faces.face_count


def _offsets(degrees: List[int]) -> np.ndarray:
    offsets = np.zeros(len(degrees) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(degrees)
    return offsets


def exhaustive_search(g: Graph, budget: int = DEFAULT_EXHAUSTIVE_BUDGET,
                      progress: Optional[ProgressCallback] = None,
                      progress_interval: int = 10_000,
                      metrics: Optional[MetricsCollector] = None) -> SearchOutcome:
    """
    Try every rotation system of ``g`` and keep the Hamiltonian embeddings.

    Each vertex's first neighbour (in ``g.neighbors`` order) is pinned, so
    every vertex contributes its (deg - 1)! cyclic orders once.

    Raises:
        ResourceBoundError: If the number of rotation systems exceeds ``budget``
    """
    degrees = [g.degree(v) for v in range(g.vertex_count)]
    space = rotation_space(degrees)
    if space.exceeds(budget):
        raise ResourceBoundError(
            f"{g.describe()} has {space} rotation systems, budget is {budget}",
            space_size=space.exact, budget=budget, space_log10=space.log10)

    choices = []
    for v in range(g.vertex_count):
        nbrs = g.neighbors(v)
        if not nbrs:
            choices.append([()])
            continue
        choices.append([(nbrs[0],) + rest for rest in itertools.permutations(nbrs[1:])])

    offsets = _offsets(degrees)
    found: List[RotationSystem] = []
    best = 0
    examined = 0
    for combo in itertools.product(*choices):
        rot = RotationSystem(offsets, list(itertools.chain.from_iterable(combo)))
        hamiltonian, face_count = _hamiltonian_faces(g, rot)
        best = max(best, hamiltonian)
        if face_count and hamiltonian == face_count:
            found.append(rot)
        examined += 1
        if progress is not None and examined % progress_interval == 0:
            progress(examined, len(found))

    if metrics is not None:
        metrics.record_candidates(examined, len(found))
    logger.info(f"Exhaustive search on {g.describe()}: candidates={examined} found={len(found)}")
    return SearchOutcome(graph=g.describe(), mode=SearchMode.EXHAUSTIVE,
                         candidates_examined=examined, space_size=space.exact,
                         space_log10=space.log10,
                         embeddings_found=found, hits=len(found), max_hamiltonian_faces=best)


def random_search(g: Graph, budget: int, seed: int,
                  progress: Optional[ProgressCallback] = None,
                  progress_interval: int = 10_000,
                  metrics: Optional[MetricsCollector] = None) -> SearchOutcome:
    """
    Sample ``budget`` rotation systems and keep the Hamiltonian embeddings.

    Sampling: ``numpy.random.Generator(PCG64(seed))``; for each candidate,
    vertices in ascending order each take ``rng.permutation`` of their sorted
    neighbour list. Embeddings are kept once up to rotation of each cyclic
    order; ``hits`` counts every successful sample.
    """
    if budget < 1:
        raise DomainError(f"budget must be at least 1, got {budget}", value=budget)
    rng = np.random.Generator(np.random.PCG64(seed))
    neighbours = [np.array(sorted(g.neighbors(v)), dtype=np.int64) for v in range(g.vertex_count)]
    degrees = [len(n) for n in neighbours]
    space = rotation_space(degrees)
    offsets = _offsets(degrees)

    found: List[RotationSystem] = []
    seen = set()
    hits = 0
    best = 0
    for sample in range(1, budget + 1):
        rows = [rng.permutation(nbrs) for nbrs in neighbours]
        targets = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
        rot = RotationSystem(offsets, targets)
        hamiltonian, face_count = _hamiltonian_faces(g, rot)
        best = max(best, hamiltonian)
        if face_count and hamiltonian == face_count:
            hits += 1
            if rot not in seen:
                seen.add(rot)
                found.append(rot)
        if progress is not None and sample % progress_interval == 0:
            progress(sample, len(found))

    if metrics is not None:
        metrics.record_candidates(budget, len(found))
    logger.info(f"Random search on {g.describe()} (seed {seed}): "
                f"candidates={budget} found={len(found)} hits={hits}")
    return SearchOutcome(graph=g.describe(), mode=SearchMode.RANDOM,
                         candidates_examined=budget,
                         space_size=space.exact, space_log10=space.log10,
                         embeddings_found=found, hits=hits, max_hamiltonian_faces=best,
                         seed=seed, budget=budget)
