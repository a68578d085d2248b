"""
Rotation systems, facial-walk tracing, Euler genus and Hamiltonian
embedding verification.

A rotation system is stored in compressed rows: ``targets[offsets[v]:offsets[v+1]]``
is the cyclic order of the neighbours of ``v``. Row ``v`` position ``p``
doubles as the index of the dart ``(v, targets[offsets[v] + p])``.

Face tracing rule: the dart following ``(u, v)`` is ``(v, w)`` where ``w``
is the cyclic successor of ``u`` in the rotation at ``v``.
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import (TYPE_CHECKING, Dict, FrozenSet, Iterator, List, Optional,
                    Sequence, Tuple)

import numpy as np

from ..models.reports import EmbeddingReport, FaceSummary
from ..utils.helpers import exact_log2
from ..utils.logger import get_logger
from .exceptions import (DomainError, InvalidEmbeddingError, InvalidRotationError,
                         NonOrientableOrInvalidError)
from .hypercube import parity_array
from .matching import Graph, PerfectMatching

if TYPE_CHECKING:
    from .construct import MatchingDecomposition

Dart = Tuple[int, int]

logger = get_logger("embedding")


class RotationSystem:
    """Cyclic order of the neighbours of every vertex."""

    __slots__ = ("_offsets", "_targets")

    def __init__(self, offsets: Sequence[int], targets: Sequence[int]):
        offsets = np.array(offsets, dtype=np.int64)
        targets = np.array(targets, dtype=np.int64)
        if offsets.ndim != 1 or offsets.size == 0 or offsets[0] != 0:
            raise InvalidRotationError("row offsets must start at 0")
        if np.any(np.diff(offsets) < 0) or offsets[-1] != targets.size:
            raise InvalidRotationError("row offsets are not consistent with the neighbour array")
        offsets.setflags(write=False)
        targets.setflags(write=False)
        self._offsets = offsets
        self._targets = targets

    @classmethod
    def from_sequences(cls, rows: Sequence[Sequence[int]]) -> 'RotationSystem':
        offsets = np.zeros(len(rows) + 1, dtype=np.int64)
        offsets[1:] = np.cumsum([len(r) for r in rows])
        flat = [int(u) for row in rows for u in row]
        return cls(offsets, flat)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> 'RotationSystem':
        """Regular case: row ``v`` of ``matrix`` is the rotation at ``v``."""
        matrix = np.asarray(matrix, dtype=np.int64)
        count, degree = matrix.shape
        return cls(np.arange(count + 1, dtype=np.int64) * degree, matrix.reshape(-1))

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def targets(self) -> np.ndarray:
        return self._targets

    @property
    def vertex_count(self) -> int:
        return int(self._offsets.size - 1)

    def degrees(self) -> np.ndarray:
        return np.diff(self._offsets)

    def _regular_degree(self) -> Optional[int]:
        degrees = self.degrees()
        if degrees.size and np.all(degrees == degrees[0]):
            return int(degrees[0])
        return None

    def rotation(self, v: int) -> Tuple[int, ...]:
        if not 0 <= v < self.vertex_count:
            raise DomainError(f"vertex {v} out of range", value=v)
        return tuple(int(u) for u in self._targets[self._offsets[v]:self._offsets[v + 1]])

    def to_sequences(self) -> List[Tuple[int, ...]]:
        return [self.rotation(v) for v in range(self.vertex_count)]

    def dart_sources(self) -> np.ndarray:
        return np.repeat(np.arange(self.vertex_count, dtype=np.int64), self.degrees())

    def normalized(self) -> 'RotationSystem':
        """Each row rotated so its smallest neighbour comes first."""
        degree = self._regular_degree()
        if degree:
            matrix = self._targets.reshape(self.vertex_count, degree)
            shift = np.argmin(matrix, axis=1)
            index = (shift[:, None] + np.arange(degree)) % degree
            return RotationSystem.from_matrix(np.take_along_axis(matrix, index, axis=1))
        rows = []
        for row in self.to_sequences():
            if row:
                i = row.index(min(row))
                row = row[i:] + row[:i]
            rows.append(row)
        return RotationSystem.from_sequences(rows)

    def reflected(self) -> 'RotationSystem':
        """The mirror embedding: every cyclic order reversed."""
        degree = self._regular_degree()
        if degree:
            matrix = self._targets.reshape(self.vertex_count, degree)
            return RotationSystem.from_matrix(matrix[:, ::-1])
        return RotationSystem.from_sequences([row[::-1] for row in self.to_sequences()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return np.array_equal(a._offsets, b._offsets) and np.array_equal(a._targets, b._targets)

    def __hash__(self) -> int:
        normal = self.normalized()
        return hash((normal._offsets.tobytes(), normal._targets.tobytes()))

    def __repr__(self) -> str:
        return f"RotationSystem(vertices={self.vertex_count}, darts={self._targets.size})"


@dataclass(frozen=True)
class FacialWalk:
    """A closed walk bounding one face, as its vertex sequence."""

    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def darts(self) -> List[Dart]:
        walk = self.vertices
        return [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]

    def edge_codes(self, vertex_count: int) -> np.ndarray:
        """Sorted ``lo * V + hi`` codes of the traversed edges, with repetition."""
        walk = np.asarray(self.vertices, dtype=np.int64)
        succ = np.roll(walk, -1)
        return np.sort(np.minimum(walk, succ) * vertex_count + np.maximum(walk, succ))

    def starting_at(self, v: int) -> 'FacialWalk':
        i = self.vertices.index(v)
        return FacialWalk(self.vertices[i:] + self.vertices[:i])

    def reversed(self) -> 'FacialWalk':
        """The same face traversed backwards, still starting at the same vertex."""
        if not self.vertices:
            return self
        return FacialWalk((self.vertices[0],) + self.vertices[:0:-1])


def euler_genus(v: int, e: int, f: int) -> int:
    """
    Genus of the orientable surface from ``v - e + f = 2 - 2g``.

    Raises:
        NonOrientableOrInvalidError: If the Euler characteristic is odd
        InvalidEmbeddingError: If the implied genus is negative
    """
    chi = v - e + f
    if chi % 2:
        raise NonOrientableOrInvalidError(
            f"Euler characteristic {chi} is odd (v={v}, e={e}, f={f})", euler_characteristic=chi)
    if chi > 2:
        raise InvalidEmbeddingError(f"Euler characteristic {chi} implies negative genus",
                                    genus=(2 - chi) // 2)
    return (2 - chi) // 2


@dataclass(frozen=True)
class FaceSet:
    """All faces of a traced embedding, with the graph counts."""

    walks: Tuple[FacialWalk, ...]
    vertex_count: int
    edge_count: int

    @property
    def face_count(self) -> int:
        return len(self.walks)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def genus(self) -> int:
        return euler_genus(self.vertex_count, self.edge_count, self.face_count)

    @property
    def lengths(self) -> List[int]:
        return [len(w) for w in self.walks]

    def dart_orbits(self) -> FrozenSet[Tuple[Dart, ...]]:
        """Faces as dart cycles, each rotated to start at its smallest dart."""
        orbits = set()
        for walk in self.walks:
            darts = walk.darts()
            i = darts.index(min(darts))
            orbits.add(tuple(darts[i:] + darts[:i]))
        return frozenset(orbits)

    def __len__(self) -> int:
        return len(self.walks)

    def __iter__(self) -> Iterator[FacialWalk]:
        return iter(self.walks)


def _degree_array(g: Graph) -> np.ndarray:
    return np.fromiter((g.degree(v) for v in range(g.vertex_count)),
                       dtype=np.int64, count=g.vertex_count)


def check_rotation(g: Graph, rot: RotationSystem) -> None:
    """
    Check that every row of ``rot`` is a full cyclic order of the neighbours
    of its vertex in ``g``.

    Raises:
        InvalidRotationError: Naming the first offending vertex
    """
    count = g.vertex_count
    if rot.vertex_count != count:
        raise InvalidRotationError(
            f"rotation system covers {rot.vertex_count} vertices, graph has {count}")

    bad = rot.degrees() != _degree_array(g)
    src = rot.dart_sources()
    targets = rot.targets
    bad[src[~g.edge_mask(src, targets)]] = True

    codes = src * count + targets
    order = np.argsort(codes, kind="stable")
    repeated = order[1:][codes[order][1:] == codes[order][:-1]]
    bad[src[repeated]] = True

    if bad.any():
        v = int(np.argmax(bad))
        raise InvalidRotationError(
            f"rotation at vertex {v} is not a cyclic order of its {g.degree(v)} neighbours",
            vertex=v)


def next_dart_array(rot: RotationSystem) -> Tuple[np.ndarray, np.ndarray]:
    """
    Dart sources and the face-successor permutation of a valid rotation system.

    Returns:
        ``(sources, successor)`` indexed by dart
    """
    count = rot.vertex_count
    offsets = rot.offsets
    targets = rot.targets
    degrees = rot.degrees()
    sources = rot.dart_sources()

    codes = sources * count + targets
    order = np.argsort(codes)
    reverse = order[np.searchsorted(codes[order], targets * count + sources)]
    position = np.arange(targets.size, dtype=np.int64) - offsets[sources]
    successor = offsets[targets] + (position[reverse] + 1) % degrees[targets]
    return sources, successor


def trace_faces(g: Graph, rot: RotationSystem, validate: bool = True) -> FaceSet:
    """
    Trace every face of the embedding of ``g`` given by ``rot``.

    Faces come out ordered by their first dart; each walk starts at the
    source of that dart.

    Raises:
        InvalidRotationError: If a rotation is not a full cycle over the neighbours
    """
    if validate:
        check_rotation(g, rot)
    sources, successor = next_dart_array(rot)
    src = sources.tolist()
    nxt = successor.tolist()

    visited = bytearray(len(nxt))
    walks = []
    for start in range(len(nxt)):
        if visited[start]:
            continue
        vertices = []
        d = start
        while not visited[d]:
            visited[d] = 1
            vertices.append(src[d])
            d = nxt[d]
        walks.append(FacialWalk(tuple(vertices)))

    logger.debug(f"Traced {len(walks)} faces on {g.describe()}")
    return FaceSet(tuple(walks), g.vertex_count, len(nxt) // 2)


def is_hamiltonian_face(g: Graph, walk: FacialWalk) -> bool:
    """True iff the walk visits every vertex of ``g`` exactly once."""
    return len(walk) == g.vertex_count and len(set(walk.vertices)) == g.vertex_count


def hamiltonian_face_count(g: Graph, faces: FaceSet) -> int:
    return sum(1 for walk in faces if is_hamiltonian_face(g, walk))


def match_faces_to_unions(faces: FaceSet,
                          matchings: Sequence[PerfectMatching]) -> List[Optional[int]]:
    """
    For each face, the index ``i`` of a consecutive union ``M_i + M_{i+1}``
    with the same edge set; each union is used at most once.
    """
    count = len(matchings)
    codes = [m.edge_codes() for m in matchings]
    unions: Dict[bytes, List[int]] = defaultdict(list)
    for i in range(count):
        key = np.sort(np.concatenate([codes[i], codes[(i + 1) % count]])).tobytes()
        unions[key].append(i)

    assignment: List[Optional[int]] = []
    for walk in faces:
        bucket = unions.get(walk.edge_codes(faces.vertex_count).tobytes())
        assignment.append(bucket.pop(0) if bucket else None)
    return assignment


def rotation_from_decomposition(dec: 'MatchingDecomposition', uniform: bool = False) -> RotationSystem:
    """
    Rotation system read off a matching decomposition of Q_n.

    Even-weight vertices list their partners in ascending matching index,
    odd-weight vertices in descending index. ``uniform=True`` uses ascending
    order everywhere; its faces do not alternate two matchings once n >= 4.
    """
    matchings = dec.matchings
    if len(matchings) < 2:
        raise DomainError(f"need at least two matchings, got {len(matchings)}", value=len(matchings))
    matrix = np.stack([m.partner for m in matchings], axis=1)
    if not uniform:
        odd = parity_array(exact_log2(matrix.shape[0])).astype(bool)
        matrix[odd] = matrix[odd, ::-1]
    return RotationSystem.from_matrix(matrix)


def verify_hamiltonian_embedding(g: Graph, rot: RotationSystem,
                                 matchings: Optional[Sequence[PerfectMatching]] = None,
                                 faces: Optional[FaceSet] = None) -> EmbeddingReport:
    """
    Trace ``rot`` and report counts, genus and per-face Hamiltonicity. When
    ``matchings`` is given, also check that the faces are exactly the
    consecutive unions of the matchings.

    Raises:
        InvalidRotationError: If ``rot`` is not valid for ``g``
    """
    if faces is None:
        faces = trace_faces(g, rot)
    assignment: List[Optional[int]] = [None] * faces.face_count
    match_ok = None
    if matchings is not None:
        assignment = match_faces_to_unions(faces, matchings)
        match_ok = (len(assignment) == len(matchings)
                    and all(i is not None for i in assignment))

    summaries = [FaceSummary(index=i, length=len(walk),
                             hamiltonian=is_hamiltonian_face(g, walk),
                             union_index=assignment[i])
                 for i, walk in enumerate(faces)]
    report = EmbeddingReport(
        graph=g.describe(),
        vertex_count=faces.vertex_count,
        edge_count=faces.edge_count,
        face_count=faces.face_count,
        genus=faces.genus,
        faces=summaries,
        faces_match_unions=match_ok,
    )
    logger.info(f"{report.graph}: v={report.vertex_count} e={report.edge_count} "
                f"f={report.face_count} genus={report.genus} "
                f"hamiltonian={report.is_hamiltonian_embedding}")
    return report
