"""
Unit tests for perfect matchings, cycle covers and general graphs.
"""
import networkx as nx
import numpy as np
import pytest

from src.hypercube_embedding.core.exceptions import DomainError, SharedEdgeError
from src.hypercube_embedding.core.hypercube import EdgeRef, HypercubeGraph
from src.hypercube_embedding.core.matching import (CycleCover, Graph, PerfectMatching, SimpleGraph,
                                                   canonical_cycle, cycle_edge_set,
                                                   dimension_matching, is_simple_cycle,
                                                   union_cycles, validate_matching)


class TestPerfectMatching:
    """Tests for PerfectMatching and validate_matching."""

    def test_dimension_matching(self):
        """Test the flip-one-bit matching."""
        m = dimension_matching(2, 0)
        assert m.partner.tolist() == [1, 0, 3, 2]
        assert len(m) == 2
        assert m.edges() == [EdgeRef(0, 1), EdgeRef(2, 3)]
        assert validate_matching(HypercubeGraph(2), m)

    def test_from_edges(self):
        """Test construction from an edge list."""
        assert PerfectMatching.from_edges(4, [(0, 1), (3, 2)]) == dimension_matching(2, 0)
        with pytest.raises(DomainError):
            PerfectMatching.from_edges(4, [(0, 1), (1, 3)])
        with pytest.raises(DomainError):
            PerfectMatching.from_edges(4, [(0, 1)])

    def test_edge_codes_sorted(self):
        """Test lo*V+hi codes."""
        m = dimension_matching(3, 2)
        assert m.edge_codes().tolist() == [0 * 8 + 4, 1 * 8 + 5, 2 * 8 + 6, 3 * 8 + 7]

    @pytest.mark.parametrize("partner,vertex,reason", [
        ([0, 1, 3, 2], 0, "fixed point"),
        ([3, 2, 1, 0], 0, "not an edge"),
        ([1, 2, 3, 0], 0, "not matched back"),
        ([1, 0, -1, 2], 2, "out of range"),
    ])
    def test_validation_failures(self, partner, vertex, reason):
        """Test that the first offending vertex and the reason are reported."""
        check = validate_matching(HypercubeGraph(2), PerfectMatching(partner))
        assert not check
        assert check.vertex == vertex
        assert reason in check.reason

    def test_size_mismatch(self):
        """Test a partner map of the wrong size."""
        check = validate_matching(HypercubeGraph(3), dimension_matching(2, 0))
        assert not check
        assert "covers 4 vertices" in check.reason

    def test_dimension_out_of_range(self):
        with pytest.raises(DomainError):
            dimension_matching(2, 2)

    def test_hash_and_equality(self):
        """Test value semantics."""
        a = dimension_matching(3, 1)
        b = PerfectMatching(np.arange(8) ^ 2)
        assert a == b
        assert len({a, b}) == 1


class TestCycles:
    """Tests for cycle helpers and union_cycles."""

    def test_canonical_cycle(self):
        """Test rotation to the smallest vertex and orientation toward the smaller neighbour."""
        assert canonical_cycle((3, 2, 0, 1)) == (0, 1, 3, 2)
        assert canonical_cycle((0, 2, 3, 1)) == (0, 1, 3, 2)
        assert canonical_cycle(()) == ()

    def test_cycle_edge_set(self):
        """Test undirected edge extraction and its guards."""
        assert cycle_edge_set((0, 1, 3, 2)) == {EdgeRef(0, 1), EdgeRef(1, 3), EdgeRef(2, 3), EdgeRef(0, 2)}
        with pytest.raises(DomainError):
            cycle_edge_set((0, 1))
        with pytest.raises(DomainError):
            cycle_edge_set((0, 1, 0, 2))

    def test_is_simple_cycle(self):
        g = HypercubeGraph(2)
        assert is_simple_cycle(g, (0, 1, 3, 2))
        assert not is_simple_cycle(g, (0, 3, 1, 2))
        assert not is_simple_cycle(g, (0, 1, 0))

    def test_union_of_base_matchings(self):
        """Test that the two base matchings of Q_2 form the square."""
        g = HypercubeGraph(2)
        cover = union_cycles(g, dimension_matching(2, 0), dimension_matching(2, 1))
        assert cover.cycles == ((0, 1, 3, 2),)
        assert cover.is_spanning(4)

    def test_union_splits_into_squares(self):
        """Test that two coordinate matchings of Q_3 give two 4-cycles."""
        g = HypercubeGraph(3)
        cover = union_cycles(g, dimension_matching(3, 0), dimension_matching(3, 1))
        assert cover.lengths == [4, 4]
        assert cover.vertex_total == 8
        assert len(cover.edge_set()) == 8

    def test_union_rejects_shared_edges(self):
        g = HypercubeGraph(2)
        with pytest.raises(SharedEdgeError):
            union_cycles(g, dimension_matching(2, 0), dimension_matching(2, 0))

    def test_union_rejects_invalid_matching(self):
        g = HypercubeGraph(2)
        with pytest.raises(DomainError):
            union_cycles(g, PerfectMatching([3, 2, 1, 0]), dimension_matching(2, 0))

    def test_cover_not_spanning(self):
        cover = CycleCover(((0, 1, 3, 2),))
        assert not cover.is_spanning(8)


class TestSimpleGraph:
    """Tests for SimpleGraph."""

    def test_from_edges(self):
        """Test adjacency, degrees and edge masks of a triangle."""
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        assert isinstance(g, Graph)
        assert g.edge_count == 3
        assert g.neighbors(1) == [0, 2]
        assert g.regular_degree() == 2
        assert g.edge_mask(np.array([0, 0, 1]), np.array([1, 0, 2])).tolist() == [True, False, True]
        assert g.describe() == "graph:3"

    def test_from_networkx_relabels(self):
        """Test that labels are mapped to 0..N-1 in sorted order."""
        g = SimpleGraph.from_networkx(nx.path_graph([10, 20, 30]), name="path")
        assert g.vertex_count == 3
        assert [tuple(e) for e in g.edges()] == [(0, 1), (1, 2)]
        assert g.regular_degree() is None
        assert g.describe() == "path"

    def test_rejects_bad_adjacency(self):
        with pytest.raises(DomainError):
            SimpleGraph(2, ((1,), ()))
        with pytest.raises(DomainError):
            SimpleGraph.from_edges(2, [(0, 0)])
        with pytest.raises(DomainError):
            SimpleGraph.from_edges(2, [(0, 2)])
