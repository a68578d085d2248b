"""Text formats for rotation systems and matching decompositions."""
from .decomposition_file import (DecompositionDocument, parse_decomposition, read_decomposition,
                                 serialize_decomposition, write_decomposition)
from .rotation_file import (RotationDocument, parse_rotation, read_rotation, serialize_rotation,
                            write_rotation)

__all__ = [
    'RotationDocument',
    'parse_rotation',
    'serialize_rotation',
    'read_rotation',
    'write_rotation',
    'DecompositionDocument',
    'parse_decomposition',
    'serialize_decomposition',
    'read_decomposition',
    'write_decomposition',
]
