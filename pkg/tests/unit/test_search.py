"""
Unit tests for exhaustive and random rotation-system search.
"""
import json
import math
from functools import lru_cache

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.hypercube_embedding.core.analysis import exhaustive_search, random_search
from src.hypercube_embedding.core.exceptions import DomainError, ResourceBoundError
from src.hypercube_embedding.core.matching import SimpleGraph
from src.hypercube_embedding.models.enums import SearchMode
from src.hypercube_embedding.sources import load_graph
from src.hypercube_embedding.utils.helpers import rotation_space, rotation_space_size
from src.hypercube_embedding.utils.metrics import MetricsCollector


class TestExhaustiveSearch:
    """Tests for exhaustive_search()."""

    def test_q3_has_no_hamiltonian_embedding(self):
        """Test all 256 rotation systems of the 3-cube."""
        outcome = exhaustive_search(load_graph("hypercube:3"))
        assert outcome.candidates_examined == 256
        assert outcome.space_size == 256
        assert outcome.found == 0
        assert outcome.max_hamiltonian_faces < 3

    def test_k4(self):
        outcome = exhaustive_search(load_graph("complete:4"))
        assert (outcome.candidates_examined, outcome.found) == (16, 0)

    def test_square(self):
        """Test that the single rotation system of Q_2 is a Hamiltonian embedding."""
        outcome = exhaustive_search(load_graph("hypercube:2"))
        assert (outcome.candidates_examined, outcome.found) == (1, 1)
        assert outcome.max_hamiltonian_faces == 2
        assert outcome.to_dict()['embeddings'] == [[[1, 2], [0, 3], [3, 0], [2, 1]]]

    def test_cycle(self):
        outcome = exhaustive_search(load_graph("cycle:5"))
        assert (outcome.candidates_examined, outcome.found) == (1, 1)
        assert outcome.mode == SearchMode.EXHAUSTIVE

    def test_budget_exceeded(self):
        """Test that Q_4 is refused before any candidate is tried."""
        with pytest.raises(ResourceBoundError) as exc:
            exhaustive_search(load_graph("hypercube:4"))
        assert exc.value.space_size == 6 ** 16 == 2821109907456
        assert str(6 ** 16) in str(exc.value)

    def test_progress_callback(self, mocker):
        progress = mocker.Mock()
        exhaustive_search(load_graph("hypercube:3"), progress=progress, progress_interval=64)
        assert progress.call_args_list == [mocker.call(64, 0), mocker.call(128, 0),
                                           mocker.call(192, 0), mocker.call(256, 0)]

    def test_metrics(self):
        metrics = MetricsCollector()
        exhaustive_search(load_graph("complete:4"), metrics=metrics)
        assert metrics.get_metrics()['candidates_examined'] == 16


class TestRandomSearch:
    """Tests for random_search()."""

    def test_deterministic(self):
        """Test that a fixed seed reproduces the outcome exactly."""
        g = load_graph("hypercube:3")
        first = random_search(g, budget=50, seed=7)
        second = random_search(g, budget=50, seed=7)
        assert first.to_dict() == second.to_dict()
        assert first.candidates_examined == 50
        assert first.found == 0

    def test_duplicates_counted_as_hits(self):
        """Test that the square's one embedding is kept once but hit every time."""
        outcome = random_search(load_graph("hypercube:2"), budget=5, seed=3)
        assert outcome.found == 1
        assert outcome.hits == 5
        rendered = outcome.to_dict()
        assert rendered['seed'] == 3
        assert rendered['budget'] == 5
        assert rendered['mode'] == "random"

    def test_zero_budget(self):
        with pytest.raises(DomainError):
            random_search(load_graph("hypercube:2"), budget=0, seed=1)

    def test_summary_text(self):
        outcome = random_search(load_graph("cycle:4"), budget=3, seed=1)
        assert outcome.get_summary_text() == "candidates=3 found=1"

    def test_documented_q3_run(self):
        """Test the seeded Q_3 run against the exhaustive result."""
        outcome = random_search(load_graph("hypercube:3"), budget=10_000, seed=7)
        assert outcome.candidates_examined == 10_000
        assert (outcome.found, outcome.hits) == (0, 0)
        assert outcome.max_hamiltonian_faces < 3
        assert outcome.space_size == 256


class TestLargeSearchSpaces:
    """Tests for spaces too large to print as an exact integer."""

    def test_exhaustive_refuses_with_magnitude(self):
        expected = 1024 * math.lgamma(10) / math.log(10)
        with pytest.raises(ResourceBoundError) as exc:
            exhaustive_search(load_graph("hypercube:10"))
        assert exc.value.space_size is None
        assert exc.value.space_log10 == pytest.approx(expected, abs=1e-3)
        assert f"~10^{expected:.1f}" in str(exc.value)

    def test_exact_size_within_range(self):
        space = rotation_space([4] * 16)
        assert space.exact == 6 ** 16
        assert space.exceeds(10 ** 7)
        assert not space.exceeds(6 ** 16)
        assert str(space) == str(6 ** 16)

    def test_product_stops_at_limit(self):
        assert rotation_space_size([11] * 4096, limit=10 ** 7) is None
        assert rotation_space_size([3] * 8, limit=10 ** 7) == 256

    def test_random_outcome_renders(self):
        outcome = random_search(load_graph("hypercube:10"), budget=1, seed=7)
        rendered = outcome.to_dict()
        assert rendered['space_size'] is None
        assert rendered['space_log10'] > 5000
        assert json.loads(json.dumps(rendered))['candidates'] == 1
        assert outcome.space_text.startswith("~10^")


CUBIC_SIX = {
    'prism': nx.circular_ladder_graph(3),
    'k33': nx.complete_bipartite_graph(3, 3),
}


@lru_cache(maxsize=None)
def baseline(name):
    g = SimpleGraph.from_networkx(CUBIC_SIX[name])
    return g, exhaustive_search(g)


def relabelled(g, permutation):
    return SimpleGraph.from_edges(g.vertex_count,
                                  [(permutation[u], permutation[v]) for u, v in g.edges()])


class TestEnumerationOrder:
    """Exhaustive counts do not depend on how the vertices are numbered."""

    @given(st.permutations(range(6)))
    def test_cubic_graphs_on_six_vertices(self, permutation):
        for name in CUBIC_SIX:
            g, base = baseline(name)
            moved = exhaustive_search(relabelled(g, permutation))
            assert moved.candidates_examined == base.candidates_examined == 64
            assert (moved.found, moved.max_hamiltonian_faces) == (base.found, base.max_hamiltonian_faces)

    @given(st.permutations(range(5)))
    def test_five_cycle(self, permutation):
        outcome = exhaustive_search(relabelled(load_graph("cycle:5"), permutation))
        assert (outcome.candidates_examined, outcome.found) == (1, 1)

    @pytest.mark.parametrize("seed", [0, 1])
    def test_q3(self, seed):
        g = load_graph("hypercube:3")
        permutation = np.random.default_rng(seed).permutation(8).tolist()
        outcome = exhaustive_search(relabelled(g, permutation))
        assert (outcome.candidates_examined, outcome.found) == (256, 0)
        assert outcome.max_hamiltonian_faces == exhaustive_search(g).max_hamiltonian_faces
