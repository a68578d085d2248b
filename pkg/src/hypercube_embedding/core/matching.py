"""
Perfect matchings as involutions, unions of matchings as cycle covers, and
the cycle-merge operation, over arbitrary finite simple graphs.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import (Dict, FrozenSet, Iterable, Iterator, List, NamedTuple,
                    Optional, Protocol, Sequence, Tuple, runtime_checkable)

import networkx as nx
import numpy as np

from .exceptions import (CycleWithoutMarkerError, DomainError, MarkerOffCoverError,
                         MultipleMarkersError, PatchNotCycleError, PatchOverlapsError,
                         SharedEdgeError)
from .hypercube import EdgeRef

Cycle = Tuple[int, ...]


@runtime_checkable
class Graph(Protocol):
    """What the matching, embedding and search code needs from a host graph."""

    @property
    def vertex_count(self) -> int: ...

    @property
    def edge_count(self) -> int: ...

    def degree(self, v: int) -> int: ...

    def neighbors(self, v: int) -> List[int]: ...

    def has_edge(self, u: int, v: int) -> bool: ...

    def edge_mask(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray: ...

    def describe(self) -> str: ...


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise DomainError(
                f"adjacency lists {len(self.adjacency)} vertices, expected {self.vertex_count}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise DomainError(f"neighbours of {v} must be sorted and distinct", value=v)
            for u in nbrs:
                if u == v or not 0 <= u < self.vertex_count:
                    raise DomainError(f"invalid neighbour {u} of vertex {v}", value=(v, u))
                if v not in self.adjacency[u]:
                    raise DomainError(f"adjacency is not symmetric at {v}-{u}", value=(v, u))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]],
                   name: str = "") -> 'SimpleGraph':
        nbrs: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}", value=(u, v))
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise DomainError(f"edge {u}-{v} out of range", value=(u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs), name=name)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, name: str = "") -> 'SimpleGraph':
        """Vertices are relabelled ``0..N-1`` in sorted order of the original labels."""
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls.from_edges(relabelled.number_of_nodes(), relabelled.edges(), name=name)

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    @cached_property
    def _edge_codes(self) -> np.ndarray:
        codes = [u * self.vertex_count + v for u, nbrs in enumerate(self.adjacency)
                 for v in nbrs if u < v]
        return np.array(sorted(codes), dtype=np.int64)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(n) for n in self.adjacency]

    def neighbors(self, v: int) -> List[int]:
        if not 0 <= v < self.vertex_count:
            raise DomainError(f"vertex {v} out of range", value=v)
        return list(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and v in self.adjacency[u]

    def edge_mask(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        n = self.vertex_count
        in_range = (us >= 0) & (us < n) & (vs >= 0) & (vs < n)
        codes = np.minimum(us, vs) * n + np.maximum(us, vs)
        return in_range & (us != vs) & np.isin(codes, self._edge_codes)

    def edges(self) -> Iterator[EdgeRef]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield EdgeRef(u, v)

    def regular_degree(self) -> Optional[int]:
        """The common degree, or None if the graph is not regular."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def describe(self) -> str:
        return self.name or f"graph:{self.vertex_count}"


class PerfectMatching:
    """
    A matching stored as a total partner map ``vertex -> vertex``.

    Nothing is checked on construction; see :func:`validate_matching`.
    """

    __slots__ = ("_partner",)

    def __init__(self, partner: Sequence[int]):
        array = np.array(partner, dtype=np.int64)
        array.setflags(write=False)
        self._partner = array

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]]) -> 'PerfectMatching':
        partner = np.full(vertex_count, -1, dtype=np.int64)
        for u, v in edges:
            if partner[u] != -1 or partner[v] != -1:
                raise DomainError(f"vertex covered twice by edge {u}-{v}", value=(u, v))
            partner[u] = v
            partner[v] = u
        uncovered = np.flatnonzero(partner < 0)
        if uncovered.size:
            raise DomainError(f"vertex {int(uncovered[0])} is not covered", value=int(uncovered[0]))
        return cls(partner)

    @property
    def partner(self) -> np.ndarray:
        return self._partner

    @property
    def vertex_count(self) -> int:
        return int(self._partner.size)

    def __getitem__(self, v: int) -> int:
        return int(self._partner[v])

    def __len__(self) -> int:
        """Number of edges."""
        return self.vertex_count // 2

    def edge_codes(self) -> np.ndarray:
        """Sorted ``lo * V + hi`` codes of the matching edges."""
        v = np.arange(self.vertex_count, dtype=np.int64)
        lo = v[v < self._partner]
        return lo * self.vertex_count + self._partner[lo]

    def edges(self) -> List[EdgeRef]:
        v = np.arange(self.vertex_count, dtype=np.int64)
        lo = v[v < self._partner]
        return [EdgeRef(int(a), int(b)) for a, b in zip(lo, self._partner[lo])]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PerfectMatching):
            return NotImplemented
        return np.array_equal(self._partner, other._partner)

    def __hash__(self) -> int:
        return hash(self._partner.tobytes())

    def __repr__(self) -> str:
        return f"PerfectMatching(vertices={self.vertex_count})"


class MatchingCheck(NamedTuple):
    """Outcome of :func:`validate_matching`."""
    ok: bool
    vertex: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def dimension_matching(n: int, k: int) -> PerfectMatching:
    """The perfect matching of Q_n flipping bit ``k``."""
    if not 0 <= k < n:
        raise DomainError(f"bit {k} out of range for Q_{n}", value=k)
    return PerfectMatching(np.arange(1 << n, dtype=np.int64) ^ (1 << k))


def validate_matching(g: Graph, matching: PerfectMatching) -> MatchingCheck:
    """
    Check that ``matching`` is a fixed-point-free involution along edges of
    ``g``. The report names the first offending vertex.
    """
    partner = matching.partner
    n = g.vertex_count
    if partner.size != n:
        return MatchingCheck(False, min(int(partner.size), n),
                             f"partner map covers {partner.size} vertices, graph has {n}")

    v = np.arange(n, dtype=np.int64)
    in_range = (partner >= 0) & (partner < n)
    safe = np.where(in_range, partner, 0)
    fixed = in_range & (safe == v)
    not_involution = in_range & ~fixed & (partner[safe] != v)
    non_edge = in_range & ~fixed & ~g.edge_mask(v, safe)

    bad = ~in_range | fixed | not_involution | non_edge
    if not bad.any():
        return MatchingCheck(True)

    first = int(np.argmax(bad))
    if not in_range[first]:
        reason = f"partner {int(partner[first])} out of range"
    elif fixed[first]:
        reason = "fixed point"
    elif not_involution[first]:
        reason = f"partner {int(partner[first])} is not matched back"
    else:
        reason = f"{first}-{int(partner[first])} is not an edge"
    return MatchingCheck(False, first, reason)


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate so the smallest vertex is first; orient so the second vertex is the smaller neighbour."""
    seq = list(cycle)
    if not seq:
        return ()
    i = seq.index(min(seq))
    rotated = seq[i:] + seq[:i]
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def cycle_edge_set(cycle: Sequence[int]) -> FrozenSet[EdgeRef]:
    """Undirected edges of a simple cycle."""
    length = len(cycle)
    if length < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {length}", value=tuple(cycle))
    if len(set(cycle)) != length:
        raise DomainError("cycle repeats a vertex", value=tuple(cycle))
    return frozenset(EdgeRef.between(cycle[i], cycle[(i + 1) % length]) for i in range(length))


def is_simple_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    length = len(cycle)
    if length < 3 or len(set(cycle)) != length:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % length]) for i in range(length))


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint cycles, each stored in canonical form."""

    cycles: Tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    @property
    def lengths(self) -> List[int]:
        return [len(c) for c in self.cycles]

    @property
    def vertex_total(self) -> int:
        return sum(self.lengths)

    def edge_set(self) -> FrozenSet[EdgeRef]:
        edges = set()
        for c in self.cycles:
            edges |= cycle_edge_set(c)
        return frozenset(edges)

    def is_spanning(self, vertex_count: int) -> bool:
        seen = {v for c in self.cycles for v in c}
        return len(seen) == self.vertex_total == vertex_count


def union_cycles(g: Graph, a: PerfectMatching, b: PerfectMatching) -> CycleCover:
    """
    Decompose the union of two edge-disjoint perfect matchings into its
    alternating cycles.

    Raises:
        DomainError: If either argument is not a perfect matching of ``g``
        SharedEdgeError: If the matchings share an edge
    """
    for label, matching in (("first", a), ("second", b)):
        check = validate_matching(g, matching)
        if not check:
            raise DomainError(f"{label} matching is invalid at vertex {check.vertex}: {check.reason}",
                              value=check.vertex)

    shared = np.flatnonzero(a.partner == b.partner)
    if shared.size:
        v = int(shared[0])
        raise SharedEdgeError(f"matchings share the edge {v}-{a[v]}", vertex=v)

    pa = a.partner.tolist()
    pb = b.partner.tolist()
    seen = bytearray(g.vertex_count)
    cycles = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        cycle = []
        v = start
        use_a = True
        while True:
            seen[v] = 1
            cycle.append(v)
            v = pa[v] if use_a else pb[v]
            use_a = not use_a
            if v == start:
                break
        cycles.append(canonical_cycle(cycle))
    return CycleCover(tuple(cycles))


def _as_edges(edges: Iterable[Tuple[int, int]]) -> List[EdgeRef]:
    return sorted({EdgeRef.between(int(u), int(v)) for u, v in edges})


def merge_cycles(g: Graph, cover: CycleCover,
                 marker: Iterable[Tuple[int, int]],
                 patch: Iterable[Tuple[int, int]]) -> Cycle:
    """
    Merge the cycles of ``cover`` into one cycle by removing the ``marker``
    edges (one per cycle) and adding the ``patch`` edges.

    Every precondition is checked: each marker edge lies on a cycle, each
    cycle holds exactly one marker edge, the patch avoids the marker and the
    cover, and marker plus patch form a single cycle.

    Returns:
        The merged cycle in canonical form
    """
    marker_edges = _as_edges(marker)
    patch_edges = _as_edges(patch)

    owner: Dict[int, int] = {}
    position: Dict[int, int] = {}
    for index, cycle in enumerate(cover.cycles):
        for pos, v in enumerate(cycle):
            if v in owner:
                raise DomainError(f"cover cycles share vertex {v}", value=v)
            owner[v] = index
            position[v] = pos

    def cycle_of(edge: EdgeRef) -> Optional[int]:
        u, v = edge
        index = owner.get(u)
        if index is None or owner.get(v) != index:
            return None
        length = len(cover.cycles[index])
        return index if (position[u] - position[v]) % length in (1, length - 1) else None

    marker_of_cycle: Dict[int, EdgeRef] = {}
    for edge in marker_edges:
        index = cycle_of(edge)
        if index is None:
            raise MarkerOffCoverError(f"marker edge {edge.lo}-{edge.hi} lies on no cycle", edge=edge)
        if index in marker_of_cycle:
            raise MultipleMarkersError(f"cycle {index} holds more than one marker edge",
                                       edge=edge, cycle_index=index)
        marker_of_cycle[index] = edge
    for index in range(len(cover)):
        if index not in marker_of_cycle:
            raise CycleWithoutMarkerError(f"cycle {index} holds no marker edge", cycle_index=index)

    marker_set = set(marker_edges)
    for edge in patch_edges:
        if edge in marker_set:
            raise PatchOverlapsError(f"patch edge {edge.lo}-{edge.hi} is also a marker edge", edge=edge)
        index = cycle_of(edge)
        if index is not None:
            raise PatchOverlapsError(f"patch edge {edge.lo}-{edge.hi} lies on cycle {index}",
                                     edge=edge, cycle_index=index)
        if not g.has_edge(edge.lo, edge.hi):
            raise DomainError(f"patch edge {edge.lo}-{edge.hi} is not an edge of the graph",
                              value=tuple(edge))

    marker_partner: Dict[int, int] = {}
    for u, v in marker_edges:
        marker_partner[u] = v
        marker_partner[v] = u
    patch_partner: Dict[int, int] = {}
    for u, v in patch_edges:
        if u in patch_partner or v in patch_partner:
            raise PatchNotCycleError(f"patch covers a vertex twice at {u}-{v}", edge=(u, v))
        patch_partner[u] = v
        patch_partner[v] = u
    if patch_partner.keys() != marker_partner.keys():
        raise PatchNotCycleError("marker and patch cover different vertices")

    merged: List[int] = []
    start = min(marker_partner)
    x = start
    markers_used = 0
    while True:
        y = marker_partner[x]
        cycle = cover.cycles[owner[x]]
        px, length = position[x], len(cycle)
        if (px + 1) % length == position[y]:
            merged.extend(cycle[px::-1])
            merged.extend(cycle[:px:-1])
        else:
            merged.extend(cycle[px:])
            merged.extend(cycle[:px])
        markers_used += 1
        x = patch_partner[y]
        if x == start:
            break
    if markers_used != len(marker_edges):
        raise PatchNotCycleError(
            f"marker and patch split into several cycles ({markers_used} of {len(marker_edges)} "
            f"marker edges reached)")
    return canonical_cycle(merged)
