"""
Graphs read from an adjacency-list file ``file:<path>``.

The file uses the networkx adjacency-list format: each line names a vertex
followed by its neighbours, ``#`` starts a comment. Vertices must be the
integers ``0..N-1``.
"""
from pathlib import Path

import networkx as nx

from ..core.base_source import BaseGraphSource
from ..core.exceptions import GraphSourceError
from ..core.matching import SimpleGraph
from ..models.enums import SourceType


class AdjacencySource(BaseGraphSource):
    """Simple graph from an adjacency-list file."""

    def get_source_type(self) -> SourceType:
        return SourceType.FILE

    def load(self) -> SimpleGraph:
        path = Path(self.argument)
        try:
            graph = nx.read_adjlist(path, nodetype=int)
        except OSError as e:
            raise GraphSourceError(f"Cannot read adjacency file {path}: {e}",
                                   spec=self.spec, original_error=e)
        except (TypeError, ValueError) as e:
            raise GraphSourceError(f"Adjacency file {path} is malformed: {e}",
                                   spec=self.spec, original_error=e)

        nodes = sorted(graph.nodes())
        if nodes != list(range(len(nodes))):
            raise GraphSourceError(f"Vertices of {path} must be 0..{len(nodes) - 1}", spec=self.spec)
        if nx.number_of_selfloops(graph):
            raise GraphSourceError(f"Adjacency file {path} contains a loop", spec=self.spec)

        self.logger.info(f"Read {graph.number_of_nodes()} vertices, "
                         f"{graph.number_of_edges()} edges from {path}")
        return SimpleGraph.from_networkx(graph, name=self.spec)
