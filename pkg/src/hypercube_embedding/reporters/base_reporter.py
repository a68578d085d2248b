"""
Abstract base class for report renderers.
Defines the contract that all reporter implementations must follow.
"""
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

from ..core.exceptions import ReporterError
from ..models.enums import ReporterType
from ..models.reports import ReportDocument
from ..utils.logger import get_logger


class BaseReporter(ABC):
    """Abstract base class for all report renderers."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize reporter.

        Args:
            config: Reporter configuration; ``output_path`` writes to a file
                instead of standard output
        """
        self.config = config or {}
        self.logger = get_logger(f"{self.__class__.__name__}")
        self.output_path = self.config.get('output_path')

    @abstractmethod
    def get_reporter_type(self) -> ReporterType:
        pass

    @abstractmethod
    def render(self, document: ReportDocument) -> str:
        """
        Render the document as text ending in a newline.

        Raises:
            ReporterError: If rendering fails
        """
        pass

    def report(self, document: ReportDocument, stream: Optional[TextIO] = None) -> str:
        """
        Render and emit the document to ``output_path`` or ``stream``
        (standard output by default).

        Returns:
            The rendered text
        """
        try:
            text = self.render(document)
        except Exception as e:
            self.logger.error(f"Failed to render report: {str(e)}", exc_info=True)
            raise ReporterError(
                message=f"Failed to render {self.get_reporter_type()} report: {str(e)}",
                reporter_type=str(self.get_reporter_type()),
                output_path=self.output_path,
                original_error=e
            )

        if self.output_path:
            self._ensure_output_directory()
            with open(self.output_path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
            self.logger.info(f"{self.get_reporter_type()} report written: {self.output_path}")
        else:
            (stream or sys.stdout).write(text)
        return text

    def _ensure_output_directory(self) -> None:
        if self.output_path:
            Path(self.output_path).parent.mkdir(parents=True, exist_ok=True)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(type={self.get_reporter_type()})"
