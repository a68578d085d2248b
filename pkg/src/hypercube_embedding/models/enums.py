"""
Enumerations for the hypercube embedding toolkit.
Provides type-safe constants for parities, clause statuses, clause types,
graph sources, search modes and reporters.
"""
from enum import Enum, IntEnum


class Parity(str, Enum):
    """Weight parity of a hypercube vertex label."""
    EVEN = "even"
    ODD = "odd"

    def __str__(self):
        return self.value

    @classmethod
    def of_weight(cls, weight: int) -> 'Parity':
        return cls.EVEN if weight % 2 == 0 else cls.ODD

    @property
    def bit(self) -> int:
        """0 for even, 1 for odd."""
        return 0 if self is Parity.EVEN else 1


class ClauseStatus(str, Enum):
    """Status of a verification clause."""
    PASSED = "PASSED"
    FAILED = "FAILED"
    SKIPPED = "SKIPPED"
    ERROR = "ERROR"

    def __str__(self):
        return self.value

    @property
    def is_successful(self) -> bool:
        """Check if status indicates success."""
        return self is ClauseStatus.PASSED

    @property
    def is_failure(self) -> bool:
        """Check if status indicates failure."""
        return self in (ClauseStatus.FAILED, ClauseStatus.ERROR)


class ClauseType(str, Enum):
    """Verification clause, listed in canonical evaluation order."""
    MATCHINGS_DISJOINT = "matchings_disjoint"
    MATCHINGS_PERFECT = "matchings_perfect"
    MATCHINGS_COVER_EDGES = "matchings_cover_edges"
    UNIONS_HAMILTONIAN = "unions_hamiltonian"
    FACES_HAMILTONIAN = "faces_hamiltonian"
    FACES_MATCH_UNIONS = "faces_match_unions"

    def __str__(self):
        return self.value


class SourceType(str, Enum):
    """Kind of graph named by a graph-spec string."""
    HYPERCUBE = "hypercube"
    COMPLETE = "complete"
    CYCLE = "cycle"
    FILE = "file"

    def __str__(self):
        return self.value


class SearchMode(str, Enum):
    """Rotation-system search strategy."""
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"

    def __str__(self):
        return self.value


class IntersectionClass(str, Enum):
    """Classification of the common edges of two faces."""
    EMPTY = "empty"
    PERFECT_MATCHING = "perfect_matching"
    OTHER = "other"

    def __str__(self):
        return self.value


class ReporterType(str, Enum):
    """Type of report output."""
    JSON = "json"
    TEXT = "text"

    def __str__(self):
        return self.value


class ExitCode(IntEnum):
    """Process exit codes of the command-line interface."""
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    BAD_PARAMETERS = 2
    IO_FAILURE = 3
    PARSE_FAILURE = 4
    RESOURCE_BOUND = 5
