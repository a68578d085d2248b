"""Report renderers."""
from .base_reporter import BaseReporter
from .json_reporter import JSONReporter
from .reporter_factory import ReporterFactory, create_reporter
from .text_reporter import TextReporter

__all__ = ['BaseReporter', 'JSONReporter', 'TextReporter', 'ReporterFactory', 'create_reporter']
