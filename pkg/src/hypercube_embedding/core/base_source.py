"""
Abstract base class for graph sources.
A source turns the argument of a graph-spec string (``hypercube:4``,
``complete:4``, ``file:graph.adj``) into a host graph.
"""
from abc import ABC, abstractmethod

from ..models.enums import SourceType
from ..utils.logger import get_logger
from .exceptions import GraphSourceError
from .matching import Graph


class BaseGraphSource(ABC):
    """Abstract base class for all graph sources."""

    def __init__(self, argument: str):
        """
        Initialize source.

        Args:
            argument: Text after the ``<kind>:`` prefix of the graph spec
        """
        self.argument = argument
        self.logger = get_logger(f"{self.__class__.__name__}")

    @abstractmethod
    def get_source_type(self) -> SourceType:
        pass

    @abstractmethod
    def load(self) -> Graph:
        """
        Build the graph.

        Raises:
            GraphSourceError: If the argument does not describe a graph
        """
        pass

    @property
    def spec(self) -> str:
        return f"{self.get_source_type()}:{self.argument}"

    def _int_argument(self, minimum: int) -> int:
        """The argument as an integer of at least ``minimum``."""
        try:
            value = int(self.argument)
        except ValueError:
            raise GraphSourceError(f"'{self.argument}' is not an integer", spec=self.spec)
        if value < minimum:
            raise GraphSourceError(f"{self.get_source_type()} needs at least {minimum}, got {value}",
                                   spec=self.spec)
        return value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(spec='{self.spec}')"
