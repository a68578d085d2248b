"""
JSON reporter implementation.
Renders the report document as deterministic JSON.
"""
import json

from ..models.enums import ReporterType
from ..models.reports import ReportDocument
from .base_reporter import BaseReporter


class JSONReporter(BaseReporter):
    """Renders JSON reports; key order follows the document schema."""

    def get_reporter_type(self) -> ReporterType:
        return ReporterType.JSON

    def render(self, document: ReportDocument) -> str:
        indent = self.config.get('indent', 2)
        return json.dumps(document.to_dict(), indent=indent) + '\n'
