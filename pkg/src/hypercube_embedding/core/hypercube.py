"""
Bit-level representation of the hypercube Q_n.

A vertex is an n-bit integer; bit k (least significant first) is
coordinate k+1. For the doubling Q_{2m} = Q_m x Q_m the low m bits are the
inner label and the high m bits the copy label.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, NamedTuple

import numpy as np

from ..models.enums import Parity
from .exceptions import DomainError

# Counts are carried as int64 in numpy arrays.
MAX_COUNT_DIMENSION = 58


class EdgeRef(NamedTuple):
    """Canonical undirected edge, ``lo < hi``."""
    lo: int
    hi: int

    @classmethod
    def between(cls, u: int, v: int) -> 'EdgeRef':
        if u == v:
            raise DomainError(f"loop at vertex {u} is not an edge", value=(u, v))
        return cls(u, v) if u < v else cls(v, u)

    @property
    def dimension(self) -> int:
        """Bit index of ``lo XOR hi``; only meaningful for hypercube edges."""
        diff = self.lo ^ self.hi
        if diff & (diff - 1):
            raise DomainError(f"{self.lo} and {self.hi} differ in more than one bit",
                              value=tuple(self))
        return diff.bit_length() - 1


class CopyCoordinates(NamedTuple):
    """Position of a Q_{2m} vertex: which copy of Q_m, and where inside it."""
    copy: int
    inner: int


class GraphStats(NamedTuple):
    vertex_count: int
    edge_count: int
    regularity: int


def weight(v: int) -> int:
    """Population count of a label."""
    return bin(v).count("1")


def weight_parity(v: int) -> Parity:
    """Even iff the population count of ``v`` is even."""
    return Parity.of_weight(weight(v))


@lru_cache(maxsize=32)
def _parity_table(n: int) -> np.ndarray:
    table = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        table = np.concatenate([table, table ^ 1])
    table.setflags(write=False)
    return table


def parity_array(n: int) -> np.ndarray:
    """Weight parity (0 even, 1 odd) of every label of Q_n, indexed by label."""
    return _parity_table(n)


@dataclass(frozen=True)
class HypercubeGraph:
    """The n-dimensional hypercube."""

    dimension: int

    def __post_init__(self):
        if not isinstance(self.dimension, (int, np.integer)) or self.dimension < 1:
            raise DomainError(f"hypercube dimension must be a positive integer, got {self.dimension!r}",
                              value=self.dimension)

    @property
    def vertex_count(self) -> int:
        return 1 << self.dimension

    @property
    def edge_count(self) -> int:
        return self.dimension << (self.dimension - 1)

    def check_label(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise DomainError(
                f"label {v} out of range for Q_{self.dimension} (0..{self.vertex_count - 1})",
                value=v)
        return v

    def degree(self, v: int) -> int:
        return self.dimension

    def neighbors(self, v: int) -> List[int]:
        return neighbors(self, v)

    def has_edge(self, u: int, v: int) -> bool:
        diff = u ^ v
        return (0 <= u < self.vertex_count and 0 <= v < self.vertex_count
                and diff != 0 and diff & (diff - 1) == 0)

    def edge_mask(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorised ``has_edge`` over paired label arrays."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        diff = us ^ vs
        in_range = (us >= 0) & (us < self.vertex_count) & (vs >= 0) & (vs < self.vertex_count)
        return in_range & (diff != 0) & ((diff & (diff - 1)) == 0)

    def edges(self) -> Iterator[EdgeRef]:
        """All edges, ordered by ``lo`` then dimension."""
        for v in range(self.vertex_count):
            for k in range(self.dimension):
                u = v ^ (1 << k)
                if v < u:
                    yield EdgeRef(v, u)

    def render(self, v: int) -> str:
        return render_label(v, self.dimension)

    def describe(self) -> str:
        return f"hypercube:{self.dimension}"


def neighbors(g: HypercubeGraph, v: int) -> List[int]:
    """``[v ^ 2^k for k = 0..n-1]``."""
    g.check_label(v)
    return [v ^ (1 << k) for k in range(g.dimension)]


def graph_stats(g: HypercubeGraph) -> GraphStats:
    """Vertex count, edge count and regularity of Q_n."""
    if g.dimension > MAX_COUNT_DIMENSION:
        raise DomainError(f"counts for Q_{g.dimension} overflow 64-bit integers", value=g.dimension)
    return GraphStats(g.vertex_count, g.edge_count, g.dimension)


def render_label(v: int, width: int) -> str:
    """Fixed-width binary, most significant bit first."""
    return format(v, f"0{width}b")


def parse_label(text: str, width: int = None) -> int:
    """Inverse of :func:`render_label`; the leftmost character is the highest bit."""
    if not text or any(ch not in "01" for ch in text):
        raise DomainError(f"not a binary label: {text!r}", value=text)
    if width is not None and len(text) != width:
        raise DomainError(f"label {text!r} should have {width} bits", value=text)
    return int(text, 2)


def split_label(m: int, v: int) -> CopyCoordinates:
    """Split a Q_{2m} label into (copy, inner)."""
    if not 0 <= v < 1 << (2 * m):
        raise DomainError(f"label {v} out of range for Q_{2 * m}", value=v)
    return CopyCoordinates(v >> m, v & ((1 << m) - 1))


def join_label(m: int, copy: int, inner: int) -> int:
    """Inverse of :func:`split_label`."""
    limit = 1 << m
    if not (0 <= copy < limit and 0 <= inner < limit):
        raise DomainError(f"copy {copy} / inner {inner} out of range for Q_{m}", value=(copy, inner))
    return (copy << m) | inner


def outside_edge_endpoints(m: int, x: int, y: int, parity: Parity) -> np.ndarray:
    """
    Endpoints in copy ``x`` of the outside edges from Q_m^x to Q_m^y whose
    x-endpoint has the given parity, as Q_{2m} labels.

    Parity is that of the endpoint as a vertex of Q_{2m}, i.e. ``w(x) + w(u)``.
    """
    cube = HypercubeGraph(m)
    cube.check_label(x)
    cube.check_label(y)
    if not cube.has_edge(x, y):
        raise DomainError(f"copies {render_label(x, m)} and {render_label(y, m)} are not adjacent in Q_{m}",
                          value=(x, y))
    inner_parity = parity_array(m)
    wanted = parity.bit ^ (weight(x) & 1)
    inner = np.flatnonzero(inner_parity == wanted).astype(np.int64)
    return (x << m) | inner


def outside_edge_set(m: int, x: int, y: int, parity: Parity) -> FrozenSet[EdgeRef]:
    """
    The edges ``(x*2^m + u, y*2^m + u)`` whose endpoint in copy ``x`` has the
    given parity: e_E(Q_m^x, Q_m^y) for EVEN and e_O(Q_m^x, Q_m^y) for ODD.
    """
    starts = outside_edge_endpoints(m, x, y, parity)
    shift = (x ^ y) << m
    return frozenset(EdgeRef.between(int(a), int(a) ^ shift) for a in starts)
