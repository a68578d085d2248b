"""
Unit tests for hypercube labels, adjacency and outside-edge sets.
"""
import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.hypercube_embedding.core.exceptions import DomainError
from src.hypercube_embedding.core.hypercube import (EdgeRef, HypercubeGraph, graph_stats,
                                                    join_label, neighbors, outside_edge_endpoints,
                                                    outside_edge_set, parity_array, parse_label,
                                                    render_label, split_label, weight,
                                                    weight_parity)
from src.hypercube_embedding.models.enums import Parity


class TestLabels:
    """Tests for weights, parity and label rendering."""

    def test_weight_and_parity(self):
        """Test population count and its parity."""
        assert weight(0b1011) == 3
        assert weight_parity(0b1011) == Parity.ODD
        assert weight_parity(0b11) == Parity.EVEN
        assert weight_parity(0) == Parity.EVEN

    def test_parity_array_matches_weights(self):
        """Test the vectorised parity table against popcounts."""
        assert parity_array(3).tolist() == [0, 1, 1, 0, 1, 0, 0, 1]
        table = parity_array(6)
        assert all(table[v] == weight(v) % 2 for v in range(64))

    def test_render_and_parse(self):
        """Test fixed-width binary rendering, most significant bit first."""
        assert render_label(5, 4) == "0101"
        assert parse_label("0101") == 5
        assert parse_label("10", width=2) == 2

    def test_parse_rejects_bad_labels(self):
        """Test that non-binary text and wrong widths are rejected."""
        with pytest.raises(DomainError):
            parse_label("012")
        with pytest.raises(DomainError):
            parse_label("")
        with pytest.raises(DomainError):
            parse_label("01", width=3)

    @given(st.integers(min_value=1, max_value=8), st.data())
    def test_split_join_inverse(self, m, data):
        """Test that join_label undoes split_label."""
        v = data.draw(st.integers(min_value=0, max_value=(1 << (2 * m)) - 1))
        copy, inner = split_label(m, v)
        assert join_label(m, copy, inner) == v

    def test_split_label_example(self):
        """Test copy/inner split of a Q_4 label."""
        assert split_label(2, 0b1101) == (0b11, 0b01)
        assert join_label(2, 3, 1) == 13
        with pytest.raises(DomainError):
            split_label(2, 16)
        with pytest.raises(DomainError):
            join_label(2, 4, 0)


class TestHypercubeGraph:
    """Tests for HypercubeGraph."""

    def test_counts(self):
        """Test vertex and edge counts."""
        g = HypercubeGraph(3)
        assert g.vertex_count == 8
        assert g.edge_count == 12
        assert len(list(g.edges())) == 12
        assert g.describe() == "hypercube:3"

    def test_invalid_dimension(self):
        """Test that dimension 0 is rejected."""
        with pytest.raises(DomainError):
            HypercubeGraph(0)

    def test_neighbors(self):
        """Test neighbour order: flip bit 0 first."""
        g = HypercubeGraph(3)
        assert neighbors(g, 0b101) == [0b100, 0b111, 0b001]
        with pytest.raises(DomainError):
            neighbors(g, 8)

    def test_has_edge_and_mask(self):
        """Test scalar and vectorised adjacency."""
        g = HypercubeGraph(3)
        assert g.has_edge(0, 1)
        assert not g.has_edge(0, 3)
        assert not g.has_edge(0, 0)
        mask = g.edge_mask(np.array([0, 0, 0, 7]), np.array([1, 3, 0, 8]))
        assert mask.tolist() == [True, False, False, False]

    def test_graph_stats_bounds(self):
        """Test that counts are refused once they overflow 64 bits."""
        assert graph_stats(HypercubeGraph(4)) == (16, 32, 4)
        assert graph_stats(HypercubeGraph(58)).edge_count == 58 << 57
        with pytest.raises(DomainError):
            graph_stats(HypercubeGraph(59))

    def test_edge_ref(self):
        """Test canonical edges and their dimension."""
        assert EdgeRef.between(5, 3) == (3, 5)
        assert EdgeRef(3, 7).dimension == 2
        with pytest.raises(DomainError):
            EdgeRef(0, 3).dimension
        with pytest.raises(DomainError):
            EdgeRef.between(2, 2)


class TestOutsideEdges:
    """Tests for the edges between two copies of Q_m inside Q_2m."""

    def test_even_and_odd_from_copy_zero(self):
        """Test the two halves of the edges between copies 00 and 01."""
        assert outside_edge_set(2, 0, 1, Parity.EVEN) == {EdgeRef(0, 4), EdgeRef(3, 7)}
        assert outside_edge_set(2, 0, 1, Parity.ODD) == {EdgeRef(1, 5), EdgeRef(2, 6)}

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_even_from_x_is_odd_from_y(self, m):
        """Test that the even edges seen from x are the odd edges seen from y."""
        cube = HypercubeGraph(m)
        for x in range(cube.vertex_count):
            for y in cube.neighbors(x):
                even = outside_edge_set(m, x, y, Parity.EVEN)
                assert even == outside_edge_set(m, y, x, Parity.ODD)
                assert len(even) == len(outside_edge_set(m, x, y, Parity.ODD)) == 1 << (m - 1)

    def test_parity_uses_full_label(self):
        """Test that endpoint parity counts the copy bits too."""
        starts = outside_edge_endpoints(2, 1, 3, Parity.EVEN)
        assert starts.tolist() == [5, 6]
        assert all(weight(int(v)) % 2 == 0 for v in starts)

    def test_halves_partition_the_edges(self):
        """Test that even and odd halves split the 2^m edges between two copies."""
        even = outside_edge_set(3, 2, 6, Parity.EVEN)
        odd = outside_edge_set(3, 2, 6, Parity.ODD)
        assert len(even) == len(odd) == 4
        assert not even & odd

    def test_non_adjacent_copies(self):
        """Test that copies must be adjacent in Q_m."""
        with pytest.raises(DomainError):
            outside_edge_set(2, 0, 3, Parity.EVEN)
