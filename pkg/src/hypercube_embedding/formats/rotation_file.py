"""
Rotation-system text format.

    rotation <n> hypercube          rotation <N> graph
    <v> : <nbr1> <nbr2> ... <nbrd>  (one line per vertex, ascending)

Hypercube files name vertices by fixed-width binary labels and carry the
dimension in the header; general files use decimal indices and carry the
vertex count.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from ..core.embedding import RotationSystem
from ..core.exceptions import ParseError
from ..core.hypercube import HypercubeGraph
from ..core.matching import Graph, SimpleGraph
from .text_io import (PathLike, content_lines, label_table, parse_count, parse_vertex,
                      read_text, write_text)

HYPERCUBE_FAMILY = "hypercube"
GRAPH_FAMILY = "graph"

# Largest hypercube a file may describe
MAX_FILE_DIMENSION = 24


@dataclass(frozen=True)
class RotationDocument:
    """A parsed rotation file."""

    rotation: RotationSystem
    dimension: Optional[int] = None

    @property
    def family(self) -> str:
        return HYPERCUBE_FAMILY if self.dimension is not None else GRAPH_FAMILY

    @property
    def vertex_count(self) -> int:
        return self.rotation.vertex_count

    def graph(self) -> Graph:
        """The host graph: Q_n, or the graph whose adjacency the rotation lists."""
        if self.dimension is not None:
            return HypercubeGraph(self.dimension)
        return SimpleGraph(self.vertex_count,
                           tuple(tuple(sorted(self.rotation.rotation(v)))
                                 for v in range(self.vertex_count)),
                           name=f"graph:{self.vertex_count}")


def serialize_rotation(rotation: RotationSystem, dimension: Optional[int] = None) -> str:
    """Render ``rotation``; pass ``dimension`` for a hypercube file."""
    count = rotation.vertex_count
    names = label_table(dimension, count)
    if dimension is None:
        header = f"rotation {count} {GRAPH_FAMILY}"
    else:
        header = f"rotation {dimension} {HYPERCUBE_FAMILY}"

    offsets = rotation.offsets.tolist()
    targets = rotation.targets.tolist()
    lines = [header]
    for v in range(count):
        row = targets[offsets[v]:offsets[v + 1]]
        lines.append(f"{names[v]} : {' '.join(names[u] for u in row)}")
    return '\n'.join(lines) + '\n'


def _parse_header(tokens: List[str], line_number: int, path: Optional[str]):
    if len(tokens) != 3 or tokens[0] != "rotation":
        raise ParseError("header must be 'rotation <size> hypercube|graph'",
                         path=path, line_number=line_number)
    size = parse_count(tokens[1], "size", line_number, path)
    family = tokens[2]
    if family == HYPERCUBE_FAMILY:
        if not 1 <= size <= MAX_FILE_DIMENSION:
            raise ParseError(f"hypercube dimension must be in 1..{MAX_FILE_DIMENSION}",
                             path=path, line_number=line_number)
        return size, 1 << size
    if family == GRAPH_FAMILY:
        return None, size
    raise ParseError(f"unknown family '{family}'", path=path, line_number=line_number)


def parse_rotation(text: str, path: Optional[str] = None) -> RotationDocument:
    """
    Parse a rotation file.

    Raises:
        ParseError: With the offending line number
    """
    lines = content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise ParseError("file is empty", path=path, line_number=1)
    dimension, count = _parse_header(header.split(), header_line, path)

    rows: Dict[int, List[int]] = {}
    row_lines: Dict[int, int] = {}
    last_line = header_line
    for line_number, line in lines:
        last_line = line_number
        head, sep, tail = line.partition(':')
        if not sep:
            raise ParseError("expected '<vertex> : <neighbours>'", path=path, line_number=line_number)
        v = parse_vertex(head.strip(), dimension, count, line_number, path)
        if v in rows:
            raise ParseError(f"vertex {head.strip()} listed twice (first on line {row_lines[v]})",
                             path=path, line_number=line_number)
        nbrs = [parse_vertex(tok, dimension, count, line_number, path) for tok in tail.split()]

        if len(set(nbrs)) != len(nbrs) or v in nbrs:
            raise ParseError(f"neighbours of {head.strip()} repeat or include the vertex itself",
                             path=path, line_number=line_number)
        if dimension is not None:
            if len(nbrs) != dimension:
                raise ParseError(f"vertex {head.strip()} lists {len(nbrs)} neighbours, expected {dimension}",
                                 path=path, line_number=line_number)
            if any(bin(v ^ u).count('1') != 1 for u in nbrs):
                raise ParseError(f"vertex {head.strip()} lists a non-adjacent label",
                                 path=path, line_number=line_number)
        rows[v] = nbrs
        row_lines[v] = line_number

    if len(rows) < count:
        first = next(v for v in itertools.count() if v not in rows)
        raise ParseError(f"{count - len(rows)} vertices have no rotation line, first {first}",
                         path=path, line_number=last_line)

    rotation = RotationSystem.from_sequences([rows[v] for v in range(count)])
    sources = rotation.dart_sources()
    targets = rotation.targets
    forward = sources * count + targets
    unmatched = ~np.isin(targets * count + sources, forward)
    if unmatched.any():
        v = int(sources[np.argmax(unmatched)])
        raise ParseError(f"vertex {v} lists {int(targets[np.argmax(unmatched)])}, "
                         f"which does not list it back", path=path, line_number=row_lines[v])
    return RotationDocument(rotation=rotation, dimension=dimension)


def read_rotation(path: PathLike) -> RotationDocument:
    return parse_rotation(read_text(path), path=str(path))


def write_rotation(path: PathLike, rotation: RotationSystem, dimension: Optional[int] = None) -> None:
    write_text(path, serialize_rotation(rotation, dimension))
