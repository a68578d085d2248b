"""
Factory for creating report renderers.
Implements the Factory pattern for easy addition of new reporters.
"""
from typing import Any, Dict, List, Optional, Type

from ..core.exceptions import ConfigurationError
from ..models.enums import ReporterType
from ..utils.logger import get_logger
from .base_reporter import BaseReporter
from .json_reporter import JSONReporter
from .text_reporter import TextReporter


class ReporterFactory:
    """Factory for creating reporter instances."""

    # Registry mapping reporter types to implementation classes
    _registry: Dict[ReporterType, Type[BaseReporter]] = {
        ReporterType.JSON: JSONReporter,
        ReporterType.TEXT: TextReporter,
    }

    _logger = get_logger("ReporterFactory")

    @classmethod
    def create(cls, reporter_type: str, config: Optional[Dict[str, Any]] = None) -> BaseReporter:
        """
        Create a reporter instance.

        Raises:
            ConfigurationError: If reporter type is not supported
        """
        try:
            rep_type = ReporterType(str(reporter_type).lower())
        except ValueError:
            raise ConfigurationError(
                f"Unknown reporter type: {reporter_type}. "
                f"Supported types: {', '.join(t.value for t in ReporterType)}"
            )
        if rep_type not in cls._registry:
            raise ConfigurationError(f"Reporter type '{reporter_type}' is registered but not implemented")
        return cls._registry[rep_type](config=config)

    @classmethod
    def register(cls, reporter_type: ReporterType, reporter_class: Type[BaseReporter]) -> None:
        """Register a new reporter type."""
        if not issubclass(reporter_class, BaseReporter):
            raise TypeError(
                f"Reporter class must inherit from BaseReporter, got {reporter_class.__name__}")
        cls._registry[reporter_type] = reporter_class
        cls._logger.info(f"Registered reporter: {reporter_type.value} -> {reporter_class.__name__}")

    @classmethod
    def get_supported_types(cls) -> List[str]:
        return [rep_type.value for rep_type in cls._registry]


def create_reporter(reporter_type: str, config: Optional[Dict[str, Any]] = None) -> BaseReporter:
    """Convenience function to create a reporter."""
    return ReporterFactory.create(reporter_type, config)
