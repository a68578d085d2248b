"""
The recursive doubling construction: from a verified matching decomposition
of Q_m whose consecutive unions are the faces of an orientable Hamiltonian
embedding, build the same structure for Q_{2m}.

Each level interleaves the new matchings as (O_1, P_1, O_2, P_2, ..., O_m, P_m):

* O_i routes the outside edges around the oriented face C_i of the previous
  level, always taking the edges whose endpoint in the current copy is even.
* P_i is M_i lifted into every copy except the start copy 0, where M_{i+1}
  is used instead.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..models.config import FrameworkConfig
from ..models.enums import Parity
from ..utils.helpers import is_power_of_two
from ..utils.logger import get_logger
from ..utils.metrics import MetricsCollector
from .base_validator import EmbeddingContext
from .embedding import RotationSystem, next_dart_array, rotation_from_decomposition
from .exceptions import (ConstructionInvariantBroken, DomainError, NotPowerOfTwoError,
                         ResourceBoundError)
from .hypercube import HypercubeGraph, outside_edge_endpoints
from .matching import (Cycle, PerfectMatching, dimension_matching, is_simple_cycle,
                       merge_cycles, union_cycles, validate_matching)
from .verification_engine import VerificationEngine

logger = get_logger("construct")


@dataclass(frozen=True)
class MatchingDecomposition:
    """Cyclically ordered perfect matchings M_1..M_k of Q_n."""

    dimension: int
    matchings: Tuple[PerfectMatching, ...]

    def __post_init__(self):
        for index, matching in enumerate(self.matchings, start=1):
            if matching.vertex_count != 1 << self.dimension:
                raise DomainError(
                    f"matching {index} covers {matching.vertex_count} vertices, "
                    f"Q_{self.dimension} has {1 << self.dimension}", value=index)

    @property
    def graph(self) -> HypercubeGraph:
        return HypercubeGraph(self.dimension)

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self) -> Iterator[PerfectMatching]:
        return iter(self.matchings)

    def matching(self, i: int) -> PerfectMatching:
        """M_i with 1-based, cyclic index."""
        return self.matchings[(i - 1) % len(self.matchings)]


@dataclass(frozen=True)
class OrientedCycleFamily:
    """Directed Hamiltonian cycles C_1..C_n, each starting at vertex 0."""

    cycles: Tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def cycle(self, i: int) -> Cycle:
        """C_i with 1-based index."""
        return self.cycles[i - 1]

    def shared_edges_opposed(self) -> bool:
        """Every edge used by two cycles is traversed in opposite directions."""
        seen = {}
        for index, cycle in enumerate(self.cycles):
            for k in range(len(cycle)):
                dart = (cycle[k], cycle[(k + 1) % len(cycle)])
                if dart in seen:
                    return False
                seen[dart] = index
        return True


class EmbeddingPrediction(NamedTuple):
    """Counts of a Hamiltonian embedding of Q_n with n faces."""
    vertex_count: int
    edge_count: int
    face_count: int
    genus: int


def hypercube_embedding_prediction(n: int) -> EmbeddingPrediction:
    """``(v, e, f, genus)`` of a Hamiltonian embedding of Q_n."""
    graph = HypercubeGraph(n)
    v, e = graph.vertex_count, graph.edge_count
    return EmbeddingPrediction(v, e, n, (2 - v + e - n) // 2)


def base_case() -> Tuple[MatchingDecomposition, RotationSystem]:
    """Q_2 with M_1 = {00-01, 10-11} and M_2 = {00-10, 01-11}."""
    dec = MatchingDecomposition(2, (dimension_matching(2, 0), dimension_matching(2, 1)))
    return dec, rotation_from_decomposition(dec)


def oriented_faces(dec: MatchingDecomposition, rot: RotationSystem) -> OrientedCycleFamily:
    """
    Read the oriented cycles C_i off the faces of ``rot``.

    C_i is the facial walk through the dart ``(M_i(0), 0)``, started at 0, so
    its first step follows M_{i+1}. Its edge set must be M_i + M_{i+1}.

    Raises:
        ConstructionInvariantBroken: If a face is not Hamiltonian or not the expected union
    """
    graph = dec.graph
    count = len(dec)
    sources, successor = next_dart_array(rot)
    src = sources.tolist()
    nxt = successor.tolist()

    cycles = []
    for i in range(count):
        matching = dec.matchings[i]
        into_zero = int(rot.offsets[matching[0]]) + rot.rotation(matching[0]).index(0)
        first = nxt[into_zero]
        walk = [src[first]]
        d = nxt[first]
        while d != first:
            walk.append(src[d])
            d = nxt[d]
            if len(walk) > graph.vertex_count:
                break
        if len(walk) != graph.vertex_count or len(set(walk)) != graph.vertex_count:
            raise ConstructionInvariantBroken(
                f"face through dart ({matching[0]}, 0) is not Hamiltonian",
                clause="faces_hamiltonian", level=dec.dimension)

        following = dec.matchings[(i + 1) % count]
        cycle = np.asarray(walk, dtype=np.int64)
        step = np.roll(cycle, -1)
        along = (matching.partner[cycle] == step) | (following.partner[cycle] == step)
        if not along.all():
            raise ConstructionInvariantBroken(
                f"face {i + 1} is not the union of matchings {i + 1} and {(i + 1) % count + 1}",
                clause="faces_match_unions", level=dec.dimension)
        cycles.append(tuple(walk))

    return OrientedCycleFamily(tuple(cycles))


def lift_matching(matching: PerfectMatching, m: int) -> PerfectMatching:
    """N: the matching of Q_m copied into every copy of Q_m inside Q_{2m}."""
    if matching.vertex_count != 1 << m:
        raise DomainError(f"matching is not over Q_{m}", value=m)
    copies = np.arange(1 << m, dtype=np.int64) << m
    return PerfectMatching((copies[:, None] | matching.partner[None, :]).reshape(-1))


def build_outside(m: int, cycle: Sequence[int]) -> PerfectMatching:
    """
    O: for each directed step ``x -> y`` of the Hamiltonian cycle of Q_m,
    the outside edges between copies x and y whose endpoint in copy x is even.

    Raises:
        ConstructionInvariantBroken: If the result is not a perfect matching of Q_{2m}
    """
    cube = HypercubeGraph(m)
    if len(cycle) != cube.vertex_count or not is_simple_cycle(cube, cycle):
        raise ConstructionInvariantBroken(
            f"outside routing needs a Hamiltonian cycle of Q_{m}", clause="matchings_perfect", level=2 * m)

    partner = np.full(1 << (2 * m), -1, dtype=np.int64)
    for j, x in enumerate(cycle):
        y = cycle[(j + 1) % len(cycle)]
        starts = outside_edge_endpoints(m, x, y, Parity.EVEN)
        ends = starts ^ ((x ^ y) << m)
        if np.any(partner[starts] >= 0) or np.any(partner[ends] >= 0):
            raise ConstructionInvariantBroken(
                f"outside edges of step {x}->{y} cover a vertex twice",
                clause="matchings_perfect", level=2 * m)
        partner[starts] = ends
        partner[ends] = starts

    outside = PerfectMatching(partner)
    check = validate_matching(HypercubeGraph(2 * m), outside)
    if not check:
        raise ConstructionInvariantBroken(
            f"outside matching invalid at vertex {check.vertex}: {check.reason}",
            clause="matchings_perfect", level=2 * m)
    return outside


def build_patched_inside(dec_m: MatchingDecomposition, i: int, z: int = 0) -> PerfectMatching:
    """
    P_i: M_{i+1} inside copy ``z``, M_i inside every other copy. ``i`` is 1-based.

    Raises:
        ConstructionInvariantBroken: If the result is not a perfect matching of Q_{2m}
    """
    m = dec_m.dimension
    if not 1 <= i <= len(dec_m):
        raise DomainError(f"matching index {i} out of range 1..{len(dec_m)}", value=i)
    HypercubeGraph(m).check_label(z)

    rows = np.tile(dec_m.matching(i).partner, (1 << m, 1))
    rows[z] = dec_m.matching(i + 1).partner
    copies = np.arange(1 << m, dtype=np.int64) << m
    patched = PerfectMatching((copies[:, None] | rows).reshape(-1))

    check = validate_matching(HypercubeGraph(2 * m), patched)
    if not check:
        raise ConstructionInvariantBroken(
            f"patched inside matching {i} invalid at vertex {check.vertex}: {check.reason}",
            clause="matchings_perfect", level=2 * m)
    return patched


def _check_merge(dec_m: MatchingDecomposition, i: int, outside: PerfectMatching,
                 patched: PerfectMatching, next_outside: PerfectMatching) -> None:
    """
    Rebuild O_i + P_i and P_i + O_{i+1} by merging the cycles of N_i + O
    through the copy-0 edges, and compare with the assembled matchings.
    """
    m = dec_m.dimension
    big = HypercubeGraph(2 * m)
    lifted = lift_matching(dec_m.matching(i), m)
    marker = dec_m.matching(i).edges()
    patch = dec_m.matching(i + 1).edges()

    for label, routing in (("O_i + P_i", outside), ("P_i + O_i+1", next_outside)):
        cover = union_cycles(big, lifted, routing)
        merged = np.asarray(merge_cycles(big, cover, marker, patch), dtype=np.int64)
        step = np.roll(merged, -1)
        along = (routing.partner[merged] == step) | (patched.partner[merged] == step)
        if merged.size != big.vertex_count or not along.all():
            raise ConstructionInvariantBroken(
                f"merged cycle for {label} differs from the assembled union at i={i}",
                clause="unions_hamiltonian", level=2 * m)


def _build_pair(dec_m: MatchingDecomposition, family: OrientedCycleFamily,
                i: int) -> Tuple[PerfectMatching, PerfectMatching]:
    return build_outside(dec_m.dimension, family.cycle(i)), build_patched_inside(dec_m, i)


def double(dec_m: MatchingDecomposition, rot_m: RotationSystem,
           config: Optional[FrameworkConfig] = None) -> Tuple[MatchingDecomposition, RotationSystem]:
    """
    One doubling step Q_m -> Q_{2m}.

    Raises:
        ConstructionInvariantBroken: Naming the first failed verification clause
    """
    config = config or FrameworkConfig()
    m = dec_m.dimension
    family = oriented_faces(dec_m, rot_m)
    indices = list(range(1, m + 1))

    settings = config.settings
    if settings.parallel_execution:
        with ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
            pairs = list(executor.map(lambda i: _build_pair(dec_m, family, i), indices))
    else:
        pairs = [_build_pair(dec_m, family, i) for i in indices]

    if config.construction.merge_check:
        for i, (outside, patched) in zip(indices, pairs):
            next_outside = pairs[i % m][0]
            _check_merge(dec_m, i, outside, patched, next_outside)

    matchings: List[PerfectMatching] = [matching for pair in pairs for matching in pair]
    dec = MatchingDecomposition(2 * m, tuple(matchings))
    rot = rotation_from_decomposition(dec)

    context = EmbeddingContext.from_matchings(dec.graph, dec.matchings, rot)
    summary = VerificationEngine(config).run(context)
    failure = summary.first_failure()
    if failure is not None:
        raise ConstructionInvariantBroken(
            f"Q_{2 * m} failed {failure.clause}: {failure.message or failure.error_message}",
            clause=str(failure.clause), level=2 * m)
    return dec, rot


def construct(n: int, config: Optional[FrameworkConfig] = None,
              metrics: Optional[MetricsCollector] = None) -> Tuple[MatchingDecomposition, RotationSystem]:
    """
    Build the matching decomposition and rotation system of Q_n, n a power of two.

    Raises:
        NotPowerOfTwoError: If n is not a power of two of at least 2
        ResourceBoundError: If n exceeds the configured maximum dimension
    """
    config = config or FrameworkConfig()
    if not isinstance(n, int) or n < 2 or not is_power_of_two(n):
        raise NotPowerOfTwoError(f"n must be a power of two (2, 4, 8, 16, ...), got {n}", n=n)
    limit = config.construction.max_dimension
    if n > limit:
        raise ResourceBoundError(f"Q_{n} has {1 << n} vertices; the limit is Q_{limit}",
                                 space_size=1 << n, budget=1 << limit)

    metrics = metrics or MetricsCollector()
    metrics.start()
    dec, rot = base_case()
    metrics.record_level(2, 0.0)
    while dec.dimension < n:
        started = time.perf_counter()
        dec, rot = double(dec, rot, config)
        elapsed = time.perf_counter() - started
        metrics.record_level(dec.dimension, elapsed)
        logger.info(f"Built Q_{dec.dimension}: {len(dec)} matchings of "
                    f"{len(dec.matchings[0])} edges in {elapsed:.2f}s")
    metrics.end()
    return dec, rot

