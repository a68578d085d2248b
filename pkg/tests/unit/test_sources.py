"""
Unit tests for graph sources and graph-spec resolution.
"""
import pytest

from src.hypercube_embedding.core.exceptions import GraphSourceError
from src.hypercube_embedding.core.hypercube import HypercubeGraph
from src.hypercube_embedding.models.enums import SourceType
from src.hypercube_embedding.sources import (AdjacencySource, GraphSourceFactory, HypercubeSource,
                                             load_graph)


class TestGraphSpecs:
    """Tests for load_graph() on the built-in families."""

    def test_hypercube(self):
        g = load_graph("hypercube:3")
        assert isinstance(g, HypercubeGraph)
        assert g.edge_count == 12

    @pytest.mark.parametrize("spec,vertices,edges,degree", [
        ("complete:4", 4, 6, 3),
        ("complete:5", 5, 10, 4),
        ("cycle:5", 5, 5, 2),
    ])
    def test_families(self, spec, vertices, edges, degree):
        g = load_graph(spec)
        assert (g.vertex_count, g.edge_count, g.regular_degree()) == (vertices, edges, degree)
        assert g.describe() == spec

    @pytest.mark.parametrize("spec", ["bogus:3", "hypercube:x", "cycle:2", "complete:1", "nothing"])
    def test_bad_specs(self, spec):
        with pytest.raises(GraphSourceError):
            load_graph(spec)

    def test_case_insensitive_kind(self):
        source = GraphSourceFactory.create_from_spec("HYPERCUBE:2")
        assert isinstance(source, HypercubeSource)
        assert source.spec == "hypercube:2"


class TestAdjacencySource:
    """Tests for adjacency-list files."""

    def test_read_file(self, tmp_path):
        path = tmp_path / "square.adj"
        path.write_text("# a square\n0 1 3\n1 2\n2 3\n")
        g = load_graph(f"file:{path}")
        assert g.vertex_count == 4
        assert g.edge_count == 4
        assert g.neighbors(0) == [1, 3]

    def test_bare_path(self, tmp_path):
        """Test that an existing path without a prefix is read as an adjacency list."""
        path = tmp_path / "triangle.adj"
        path.write_text("0 1 2\n1 2\n")
        assert load_graph(str(path)).edge_count == 3

    def test_missing_file(self):
        with pytest.raises(GraphSourceError) as exc_info:
            AdjacencySource("/nonexistent/graph.adj").load()
        assert isinstance(exc_info.value.original_error, OSError)

    @pytest.mark.parametrize("content", ["0 1\n1 5\n", "0 0 1\n", "a b\n"])
    def test_malformed(self, tmp_path, content):
        """Test gaps in the vertex numbering, loops and non-integer labels."""
        path = tmp_path / "bad.adj"
        path.write_text(content)
        with pytest.raises(GraphSourceError):
            load_graph(f"file:{path}")


class TestGraphSourceFactory:

    def test_supported_types(self):
        assert GraphSourceFactory.get_supported_types() == [t.value for t in SourceType]

    def test_register_rejects_non_sources(self):
        with pytest.raises(TypeError):
            GraphSourceFactory.register(SourceType.CYCLE, str)
