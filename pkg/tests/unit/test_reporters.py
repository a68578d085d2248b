"""
Unit tests for the JSON and text reporters.
"""
import io
import json

import pytest

from src.hypercube_embedding.core.analysis import necessary_conditions
from src.hypercube_embedding.core.embedding import verify_hamiltonian_embedding
from src.hypercube_embedding.core.exceptions import ConfigurationError, ReporterError
from src.hypercube_embedding.models.reports import ReportDocument
from src.hypercube_embedding.reporters import (JSONReporter, ReporterFactory, TextReporter,
                                               create_reporter)

DOCUMENT_KEYS = ['graph', 'v', 'e', 'f', 'genus', 'is_hamiltonian_embedding', 'faces',
                 'intersections', 'intersection_graph_shape', 'consistency', 'conditions',
                 'search', 'verification']


@pytest.fixture
def q4_document(q4):
    dec, rot = q4
    embedding = verify_hamiltonian_embedding(dec.graph, rot, dec.matchings)
    return ReportDocument(graph=dec.graph.describe(), embedding=embedding,
                          conditions=necessary_conditions(16, 4))


class TestJSONReporter:
    """Tests for JSONReporter."""

    def test_schema_is_stable(self, q4_document):
        """Test that every key is present, in order, even when empty."""
        rendered = json.loads(JSONReporter().render(q4_document))
        assert list(rendered) == DOCUMENT_KEYS
        assert (rendered['v'], rendered['e'], rendered['f'], rendered['genus']) == (16, 32, 4, 7)
        assert rendered['is_hamiltonian_embedding'] is True
        assert rendered['search'] is None
        assert rendered['conditions']['clauses']['both_even_product_differs_from_sum'] is False

    def test_empty_document(self):
        rendered = json.loads(JSONReporter().render(ReportDocument()))
        assert list(rendered) == DOCUMENT_KEYS
        assert rendered['faces'] == []
        assert rendered['consistency'] == {}

    def test_byte_stable(self, q4_document):
        assert JSONReporter().render(q4_document) == JSONReporter().render(q4_document)

    def test_report_to_stream(self, q4_document):
        stream = io.StringIO()
        text = JSONReporter({'indent': None}).report(q4_document, stream=stream)
        assert stream.getvalue() == text
        assert text.count('\n') == 1

    def test_report_to_file(self, q4_document, tmp_path):
        """Test output_path, including a missing parent directory."""
        target = tmp_path / "reports" / "q4.json"
        JSONReporter({'output_path': str(target)}).report(q4_document)
        assert json.loads(target.read_text())['graph'] == "hypercube:4"

    def test_render_failure(self, mocker):
        """Test that rendering errors are wrapped with their cause."""
        document = mocker.Mock()
        document.to_dict.side_effect = ValueError("bad document")
        with pytest.raises(ReporterError) as exc_info:
            JSONReporter().report(document)
        assert isinstance(exc_info.value.original_error, ValueError)
        assert exc_info.value.reporter_type == 'json'


class TestTextReporter:
    """Tests for TextReporter."""

    def test_embedding_lines(self, q4_document):
        text = TextReporter().render(q4_document)
        lines = text.splitlines()
        assert lines[0] == "graph: hypercube:4"
        assert lines[1] == "v=16 e=32 f=4 genus=7"
        assert "hamiltonian embedding: yes" in lines
        assert "faces match unions: yes" in lines
        assert "order=16 degree=4: congruence holds, implied faces 4, implied genus 7" in lines
        assert text.endswith('\n')


class TestReporterFactory:
    """Tests for ReporterFactory."""

    def test_create(self):
        assert isinstance(create_reporter('JSON'), JSONReporter)
        assert isinstance(create_reporter('text'), TextReporter)
        assert ReporterFactory.get_supported_types() == ['json', 'text']

    def test_unknown_type(self):
        with pytest.raises(ConfigurationError):
            create_reporter('html')

    def test_register_rejects_non_reporters(self):
        from src.hypercube_embedding.models.enums import ReporterType

        with pytest.raises(TypeError):
            ReporterFactory.register(ReporterType.TEXT, object)
