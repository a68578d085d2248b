"""
Complete graphs ``complete:<n>``.
"""
import networkx as nx

from ..core.base_source import BaseGraphSource
from ..core.matching import SimpleGraph
from ..models.enums import SourceType


class CompleteSource(BaseGraphSource):
    """K_n on vertices 0..n-1."""

    def get_source_type(self) -> SourceType:
        return SourceType.COMPLETE

    def load(self) -> SimpleGraph:
        n = self._int_argument(2)
        return SimpleGraph.from_networkx(nx.complete_graph(n), name=self.spec)
