"""Graph sources selected by graph-spec strings."""
from .adjacency_source import AdjacencySource
from .complete_source import CompleteSource
from .cycle_source import CycleSource
from .hypercube_source import HypercubeSource
from .source_factory import GraphSourceFactory, load_graph

__all__ = [
    'HypercubeSource',
    'CompleteSource',
    'CycleSource',
    'AdjacencySource',
    'GraphSourceFactory',
    'load_graph',
]
