"""
Cycle graphs ``cycle:<n>``, whose unique embedding has two Hamiltonian faces.
"""
import networkx as nx

from ..core.base_source import BaseGraphSource
from ..core.matching import SimpleGraph
from ..models.enums import SourceType


class CycleSource(BaseGraphSource):
    """C_n on vertices 0..n-1."""

    def get_source_type(self) -> SourceType:
        return SourceType.CYCLE

    def load(self) -> SimpleGraph:
        n = self._int_argument(3)
        return SimpleGraph.from_networkx(nx.cycle_graph(n), name=self.spec)
