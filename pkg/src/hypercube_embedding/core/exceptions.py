"""
Custom exceptions for the hypercube embedding toolkit.
Provides specific exception types for different error scenarios.
"""
from typing import Optional


class EmbeddingFrameworkError(Exception):
    """Base exception for all hypercube embedding errors."""
    pass


class ConfigurationError(EmbeddingFrameworkError):
    """Raised when there's an error in configuration files or settings."""

    def __init__(self, message: str, config_path: str = None, details: dict = None):
        self.config_path = config_path
        self.details = details or {}
        super().__init__(message)


class DomainError(EmbeddingFrameworkError):
    """Raised when an argument lies outside the domain of an operation."""

    def __init__(self, message: str, value=None):
        self.value = value
        super().__init__(message)


class SharedEdgeError(EmbeddingFrameworkError):
    """Raised when two matchings that must be disjoint share an edge."""

    def __init__(self, message: str, vertex: int = None):
        self.vertex = vertex
        super().__init__(message)


class MergePreconditionError(EmbeddingFrameworkError):
    """Base class for violated preconditions of the cycle-merge operation."""

    def __init__(self, message: str, edge: Optional[tuple] = None, cycle_index: int = None):
        self.edge = edge
        self.cycle_index = cycle_index
        super().__init__(message)


class CycleWithoutMarkerError(MergePreconditionError):
    """A cycle of the cover contains no marker edge."""
    pass


class MultipleMarkersError(MergePreconditionError):
    """A cycle of the cover contains more than one marker edge."""
    pass


class MarkerOffCoverError(MergePreconditionError):
    """A marker edge lies on no cycle of the cover."""
    pass


class PatchNotCycleError(MergePreconditionError):
    """Marker and patch edges together do not form a single cycle."""
    pass


class PatchOverlapsError(MergePreconditionError):
    """A patch edge coincides with a marker edge or a cover edge."""
    pass


class ConstructionInvariantBroken(EmbeddingFrameworkError):
    """Raised when a structural claim of the doubling construction fails."""

    def __init__(self, message: str, clause: str = None, level: int = None):
        self.clause = clause
        self.level = level
        super().__init__(message)


class NotPowerOfTwoError(EmbeddingFrameworkError):
    """Raised when a construction is requested for a dimension that is not a power of two."""

    def __init__(self, message: str, n: int = None):
        self.n = n
        super().__init__(message)


class ResourceBoundError(EmbeddingFrameworkError):
    """Raised when a request exceeds a configured size or search budget."""

    def __init__(self, message: str, space_size: int = None, budget: int = None,
                 space_log10: float = None):
        self.space_size = space_size
        self.budget = budget
        self.space_log10 = space_log10
        super().__init__(message)


class InvalidRotationError(EmbeddingFrameworkError):
    """Raised when a rotation is not a full cyclic order of a vertex's neighbours."""

    def __init__(self, message: str, vertex: int = None):
        self.vertex = vertex
        super().__init__(message)


class NonOrientableOrInvalidError(EmbeddingFrameworkError):
    """Raised when an Euler characteristic is odd."""

    def __init__(self, message: str, euler_characteristic: int = None):
        self.euler_characteristic = euler_characteristic
        super().__init__(message)


class InvalidEmbeddingError(EmbeddingFrameworkError):
    """Raised when vertex, edge and face counts imply a negative genus."""

    def __init__(self, message: str, genus: int = None):
        self.genus = genus
        super().__init__(message)


class ParseError(EmbeddingFrameworkError):
    """Raised when a rotation or decomposition file is malformed."""

    def __init__(self, message: str, path: str = None, line_number: int = None):
        self.path = path
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphSourceError(EmbeddingFrameworkError):
    """Raised when a graph-spec string cannot be resolved to a graph."""

    def __init__(self, message: str, spec: str = None, original_error: Exception = None):
        self.spec = spec
        self.original_error = original_error
        super().__init__(message)


class ReporterError(EmbeddingFrameworkError):
    """Raised when report generation fails."""

    def __init__(self, message: str, reporter_type: str = None,
                 output_path: str = None, original_error: Exception = None):
        self.reporter_type = reporter_type
        self.output_path = output_path
        self.original_error = original_error
        super().__init__(message)
