"""
Hypercube graphs ``hypercube:<n>``.
"""
from ..core.base_source import BaseGraphSource
from ..core.hypercube import HypercubeGraph
from ..models.enums import SourceType


class HypercubeSource(BaseGraphSource):
    """Q_n with bit-level adjacency; no adjacency lists are materialised."""

    def get_source_type(self) -> SourceType:
        return SourceType.HYPERCUBE

    def load(self) -> HypercubeGraph:
        return HypercubeGraph(self._int_argument(1))
