"""
Matching-decomposition text format.

    decomposition <n> <k>
    matching 1
    <u> <v>
    ...
    matching k
    ...

Vertices are fixed-width binary labels of Q_n. Blocks are numbered from 1
in order. The parser keeps edges exactly as written and does not require a
block to be a perfect matching; that is the verifier's job.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..core.construct import MatchingDecomposition
from ..core.exceptions import ParseError
from ..core.hypercube import HypercubeGraph
from ..core.matching import PerfectMatching
from .rotation_file import MAX_FILE_DIMENSION
from .text_io import (PathLike, content_lines, label_table, parse_count, parse_vertex,
                      read_text, write_text)

EdgeBlock = List[Tuple[int, int]]


@dataclass(frozen=True)
class DecompositionDocument:
    """A parsed decomposition file: raw edge blocks over Q_n."""

    dimension: int
    blocks: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def graph(self) -> HypercubeGraph:
        return HypercubeGraph(self.dimension)

    def to_decomposition(self) -> MatchingDecomposition:
        """
        Raises:
            DomainError: If a block is not a perfect matching
        """
        count = 1 << self.dimension
        return MatchingDecomposition(
            self.dimension,
            tuple(PerfectMatching.from_edges(count, block) for block in self.blocks))


def _edge_lines(names: List[str], block: Sequence[Tuple[int, int]]) -> List[str]:
    return [f"{names[u]} {names[v]}" for u, v in block]


def serialize_edge_blocks(dimension: int, blocks: Sequence[Sequence[Tuple[int, int]]]) -> str:
    names = label_table(dimension, 1 << dimension)
    lines = [f"decomposition {dimension} {len(blocks)}"]
    for index, block in enumerate(blocks, start=1):
        lines.append(f"matching {index}")
        lines.extend(_edge_lines(names, block))
    return '\n'.join(lines) + '\n'


def serialize_decomposition(dec: MatchingDecomposition) -> str:
    """Each matching lists its edges ``lo hi`` in ascending order of ``lo``."""
    return serialize_edge_blocks(dec.dimension,
                                 [[(e.lo, e.hi) for e in m.edges()] for m in dec.matchings])


def parse_decomposition(text: str, path: Optional[str] = None) -> DecompositionDocument:
    """
    Parse a decomposition file.

    Raises:
        ParseError: With the offending line number
    """
    lines = content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise ParseError("file is empty", path=path, line_number=1)

    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != "decomposition":
        raise ParseError("header must be 'decomposition <n> <matching-count>'",
                         path=path, line_number=header_line)
    dimension = parse_count(tokens[1], "dimension", header_line, path)
    expected = parse_count(tokens[2], "matching count", header_line, path)
    if not 1 <= dimension <= MAX_FILE_DIMENSION:
        raise ParseError(f"dimension must be in 1..{MAX_FILE_DIMENSION}",
                         path=path, line_number=header_line)
    count = 1 << dimension

    blocks: List[EdgeBlock] = []
    last_line = header_line
    for line_number, line in lines:
        last_line = line_number
        parts = line.split()
        if parts[0] == "matching":
            if len(parts) != 2:
                raise ParseError("expected 'matching <index>'", path=path, line_number=line_number)
            index = parse_count(parts[1], "matching index", line_number, path)
            if index != len(blocks) + 1:
                raise ParseError(f"expected matching {len(blocks) + 1}, found {index}",
                                 path=path, line_number=line_number)
            if index > expected:
                raise ParseError(f"header announces {expected} matchings",
                                 path=path, line_number=line_number)
            blocks.append([])
            continue

        if not blocks:
            raise ParseError("edge before the first 'matching' line", path=path, line_number=line_number)
        if len(parts) != 2:
            raise ParseError("expected '<u> <v>'", path=path, line_number=line_number)
        u = parse_vertex(parts[0], dimension, count, line_number, path)
        v = parse_vertex(parts[1], dimension, count, line_number, path)
        if bin(u ^ v).count('1') != 1:
            raise ParseError(f"{parts[0]} and {parts[1]} are not adjacent in Q_{dimension}",
                             path=path, line_number=line_number)
        blocks[-1].append((u, v))

    if len(blocks) != expected:
        raise ParseError(f"header announces {expected} matchings, file has {len(blocks)}",
                         path=path, line_number=last_line)
    return DecompositionDocument(dimension, tuple(tuple(block) for block in blocks))


def read_decomposition(path: PathLike) -> DecompositionDocument:
    return parse_decomposition(read_text(path), path=str(path))


def write_decomposition(path: PathLike, dec: MatchingDecomposition) -> None:
    write_text(path, serialize_decomposition(dec))
