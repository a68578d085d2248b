"""
Shared helpers for the line-oriented text formats.
"""
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from ..core.exceptions import ParseError
from ..core.hypercube import render_label

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    """
    Read an ASCII text file.

    Raises:
        ParseError: On a non-ASCII byte, naming its line
    """
    with open(path, 'rb') as f:
        raw = f.read()
    try:
        return raw.decode('ascii')
    except UnicodeDecodeError as e:
        raise ParseError(f"non-ASCII byte 0x{raw[e.start]:02x}", path=str(path),
                         line_number=raw.count(b'\n', 0, e.start) + 1) from e


def write_text(path: PathLike, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, 'w', encoding='ascii', newline='\n') as f:
        f.write(text)


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """``(line_number, stripped_line)`` for every non-blank, non-comment line."""
    for number, line in enumerate(text.split('\n'), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            yield number, stripped


def label_table(dimension: Optional[int], count: int) -> List[str]:
    """Rendered vertex names: fixed-width binary for hypercubes, decimal otherwise."""
    if dimension is None:
        return [str(v) for v in range(count)]
    return [render_label(v, dimension) for v in range(count)]


def parse_vertex(token: str, dimension: Optional[int], count: int,
                 line_number: int, path: Optional[str]) -> int:
    """Inverse of :func:`label_table` for one token."""
    if dimension is not None:
        if len(token) != dimension or any(ch not in '01' for ch in token):
            raise ParseError(f"'{token}' is not a {dimension}-bit label",
                             path=path, line_number=line_number)
        return int(token, 2)
    if not token.isdigit():
        raise ParseError(f"'{token}' is not a vertex index", path=path, line_number=line_number)
    value = int(token)
    if value >= count:
        raise ParseError(f"vertex {value} out of range 0..{count - 1}",
                         path=path, line_number=line_number)
    return value


def parse_count(token: str, what: str, line_number: int, path: Optional[str]) -> int:
    if not token.isdigit():
        raise ParseError(f"{what} '{token}' is not a non-negative integer",
                         path=path, line_number=line_number)
    return int(token)
