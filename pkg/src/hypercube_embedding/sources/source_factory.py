"""
Factory for creating graph sources from graph-spec strings.
Implements the Factory pattern for easy addition of new graph families.
"""
from pathlib import Path
from typing import Dict, List, Type

from ..core.base_source import BaseGraphSource
from ..core.exceptions import GraphSourceError
from ..core.matching import Graph
from ..models.enums import SourceType
from ..utils.logger import get_logger
from .adjacency_source import AdjacencySource
from .complete_source import CompleteSource
from .cycle_source import CycleSource
from .hypercube_source import HypercubeSource


class GraphSourceFactory:
    """Factory for creating graph source instances."""

    # Registry mapping graph-spec prefixes to implementation classes
    _registry: Dict[SourceType, Type[BaseGraphSource]] = {
        SourceType.HYPERCUBE: HypercubeSource,
        SourceType.COMPLETE: CompleteSource,
        SourceType.CYCLE: CycleSource,
        SourceType.FILE: AdjacencySource,
    }

    _logger = get_logger("GraphSourceFactory")

    @classmethod
    def create(cls, source_type: str, argument: str) -> BaseGraphSource:
        """
        Create a source instance.

        Raises:
            GraphSourceError: If the source type is not supported
        """
        try:
            kind = SourceType(source_type.lower())
        except ValueError:
            raise GraphSourceError(
                f"Unknown graph family: {source_type}. "
                f"Supported: {', '.join(t.value for t in SourceType)}",
                spec=f"{source_type}:{argument}"
            )
        if kind not in cls._registry:
            raise GraphSourceError(f"Graph family '{source_type}' is registered but not implemented")
        return cls._registry[kind](argument)

    @classmethod
    def create_from_spec(cls, spec: str) -> BaseGraphSource:
        """
        Resolve ``<kind>:<argument>``; a bare path to an existing file is read
        as an adjacency list.
        """
        kind, sep, argument = spec.partition(":")
        if sep and kind.lower() in cls.get_supported_types():
            return cls.create(kind, argument)
        if Path(spec).is_file():
            return AdjacencySource(spec)
        raise GraphSourceError(
            f"Cannot resolve graph spec '{spec}'; expected <kind>:<argument> with kind in "
            f"{', '.join(cls.get_supported_types())}, or an existing file", spec=spec)

    @classmethod
    def register(cls, source_type: SourceType, source_class: Type[BaseGraphSource]) -> None:
        """Register a new graph family."""
        if not issubclass(source_class, BaseGraphSource):
            raise TypeError(
                f"Source class must inherit from BaseGraphSource, got {source_class.__name__}")
        cls._registry[source_type] = source_class
        cls._logger.info(f"Registered source: {source_type.value} -> {source_class.__name__}")

    @classmethod
    def get_supported_types(cls) -> List[str]:
        return [kind.value for kind in cls._registry]


def load_graph(spec: str) -> Graph:
    """Convenience function: resolve a graph spec and build the graph."""
    return GraphSourceFactory.create_from_spec(spec).load()
