"""
Unit tests for the recursive doubling construction.
"""
import pytest

from src.hypercube_embedding.core.construct import (MatchingDecomposition, base_case,
                                                    build_outside, build_patched_inside,
                                                    construct, double,
                                                    hypercube_embedding_prediction, lift_matching,
                                                    oriented_faces)
from src.hypercube_embedding.core.embedding import rotation_from_decomposition, trace_faces
from src.hypercube_embedding.core.exceptions import (ConstructionInvariantBroken, DomainError,
                                                     NotPowerOfTwoError, ResourceBoundError)
from src.hypercube_embedding.core.hypercube import EdgeRef, HypercubeGraph
from src.hypercube_embedding.core.matching import (PerfectMatching, dimension_matching,
                                                   union_cycles)
from src.hypercube_embedding.core.verification_engine import verify_embedding
from src.hypercube_embedding.formats import serialize_decomposition, serialize_rotation
from src.hypercube_embedding.models.config import (ConstructionConfig, FrameworkConfig,
                                                   SettingsConfig)
from src.hypercube_embedding.utils.metrics import MetricsCollector

O_1 = [(0, 8), (3, 11), (9, 13), (10, 14), (4, 12), (7, 15), (1, 5), (2, 6)]
O_2 = [(0, 4), (3, 7), (5, 13), (6, 14), (8, 12), (11, 15), (1, 9), (2, 10)]


class TestBaseCase:
    """Tests for the Q_2 starting point."""

    def test_matchings(self):
        """Test M_1 = {00-01, 10-11} and M_2 = {00-10, 01-11}."""
        dec, _ = base_case()
        assert dec.matching(1).edges() == [EdgeRef(0, 1), EdgeRef(2, 3)]
        assert dec.matching(2).edges() == [EdgeRef(0, 2), EdgeRef(1, 3)]
        assert dec.matching(3) == dec.matching(1)

    def test_oriented_cycles(self):
        """Test that C_1 and C_2 run around the square in opposite directions."""
        family = oriented_faces(*base_case())
        assert family.cycle(1) == (0, 2, 3, 1)
        assert family.cycle(2) == (0, 1, 3, 2)
        assert family.shared_edges_opposed()

    def test_decomposition_checks_sizes(self):
        with pytest.raises(DomainError):
            MatchingDecomposition(3, (dimension_matching(2, 0),))


class TestDoublingPieces:
    """Tests for the matchings assembled at one doubling step."""

    def test_lift_matching(self):
        lifted = lift_matching(dimension_matching(2, 0), 2)
        assert lifted[5] == 4
        assert lifted[13] == 12
        with pytest.raises(DomainError):
            lift_matching(dimension_matching(2, 0), 3)

    def test_outside_matchings(self):
        """Test O_1 and O_2 of Q_4 edge by edge."""
        family = oriented_faces(*base_case())
        assert set(build_outside(2, family.cycle(1)).edges()) == {EdgeRef(*e) for e in O_1}
        assert set(build_outside(2, family.cycle(2)).edges()) == {EdgeRef(*e) for e in O_2}

    def test_outside_needs_hamiltonian_cycle(self):
        with pytest.raises(ConstructionInvariantBroken):
            build_outside(2, (0, 1, 3))

    def test_patched_inside(self):
        """Test that copy 0 takes M_2 while every other copy keeps M_1."""
        dec, _ = base_case()
        patched = build_patched_inside(dec, 1)
        assert patched[0] == 2 and patched[1] == 3
        assert patched[4] == 5 and patched[14] == 15
        with pytest.raises(DomainError):
            build_patched_inside(dec, 3)

    def test_unpatched_cover(self):
        """Test that N_i + O_i splits into 2^(m-1) cycles of length 2^(m+1)."""
        dec, rot = base_case()
        family = oriented_faces(dec, rot)
        for i in (1, 2):
            cover = union_cycles(HypercubeGraph(4), lift_matching(dec.matching(i), 2),
                                 build_outside(2, family.cycle(i)))
            assert cover.lengths == [8, 8]

    def test_interleaved_order(self, q4):
        """Test the order (O_1, P_1, O_2, P_2)."""
        dec, _ = q4
        base, rot = base_case()
        family = oriented_faces(base, rot)
        assert dec.matchings[0] == build_outside(2, family.cycle(1))
        assert dec.matchings[1] == build_patched_inside(base, 1)
        assert dec.matchings[2] == build_outside(2, family.cycle(2))
        assert dec.matchings[3] == build_patched_inside(base, 2)

    def test_double_rejects_broken_rotation(self, q4):
        """Test that a rotation whose faces do not alternate two matchings is refused."""
        dec, _ = q4
        with pytest.raises(ConstructionInvariantBroken) as exc:
            double(dec, rotation_from_decomposition(dec, uniform=True))
        assert exc.value.clause in ("faces_hamiltonian", "faces_match_unions")


class TestConstruct:
    """Tests for construct()."""

    @pytest.mark.parametrize("n", [0, 1, 3, 6, 12])
    def test_not_power_of_two(self, n):
        with pytest.raises(NotPowerOfTwoError):
            construct(n)

    def test_resource_bound(self):
        with pytest.raises(ResourceBoundError):
            construct(32)
        with pytest.raises(ResourceBoundError):
            construct(8, FrameworkConfig(construction=ConstructionConfig(max_dimension=4)))

    @pytest.mark.parametrize("fixture,n,genus", [("q2", 2, 0), ("q4", 4, 7), ("q8", 8, 381)])
    def test_levels_verify(self, request, fixture, n, genus):
        """Test the full verification suite and the genus of each level."""
        dec, rot = request.getfixturevalue(fixture)
        assert len(dec) == n
        assert all(len(m) == 1 << (n - 1) for m in dec)
        summary = verify_embedding(dec.graph, dec.matchings, rot)
        assert not summary.has_failures()
        assert summary.passed == 6
        assert trace_faces(dec.graph, rot).genus == genus

    @pytest.mark.slow
    def test_q16(self):
        """Test the largest supported cube."""
        dec, rot = construct(16)
        assert len(dec) == 16
        assert trace_faces(dec.graph, rot).genus == 229369
        assert not verify_embedding(dec.graph, dec.matchings, rot).has_failures()

    def test_deterministic(self, q8):
        dec, rot = construct(8)
        assert serialize_decomposition(dec) == serialize_decomposition(q8[0])
        assert serialize_rotation(rot, 8) == serialize_rotation(q8[1], 8)

    def test_configurations_agree(self, q8):
        """Test that the merge check and parallel building do not change the output."""
        config = FrameworkConfig(settings=SettingsConfig(parallel_execution=True, max_workers=3),
                                 construction=ConstructionConfig(merge_check=False))
        dec, _ = construct(8, config)
        assert dec.matchings == q8[0].matchings

    def test_metrics(self):
        metrics = MetricsCollector()
        construct(8, metrics=metrics)
        recorded = metrics.get_metrics()
        assert recorded['levels_built'] == 3
        assert sorted(recorded['level_seconds']) == [2, 4, 8]

    def test_o_matchings_disjoint(self, q8):
        dec, _ = q8
        outside = [set(dec.matchings[k].edges()) for k in range(0, 8, 2)]
        for i in range(len(outside)):
            for j in range(i + 1, len(outside)):
                assert not outside[i] & outside[j]

    @pytest.mark.parametrize("level", ["q2", "q4"])
    def test_reversed_cycle_routes_the_complement(self, level, request):
        """Test that O built from reverse(C) takes exactly the outside edges O built from C leaves."""
        dec, rot = request.getfixturevalue(level)
        m = dec.dimension
        family = oriented_faces(dec, rot)
        for i in range(1, m + 1):
            cycle = family.cycle(i)
            forward = set(build_outside(m, cycle).edges())
            backward = set(build_outside(m, tuple(reversed(cycle))).edges())
            assert not forward & backward
            assert len(forward | backward) == 1 << (2 * m)
            copies = {EdgeRef.between(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))}
            assert all(EdgeRef.between(e.lo >> m, e.hi >> m) in copies for e in forward | backward)

    @pytest.mark.parametrize("level", ["q2", "q4"])
    def test_patched_inside_disjoint(self, level, request):
        """Test P_i & P_j and P_i & O_j are empty for every pair of indices."""
        dec, rot = request.getfixturevalue(level)
        m = dec.dimension
        family = oriented_faces(dec, rot)
        patched = [set(build_patched_inside(dec, i).edges()) for i in range(1, m + 1)]
        outside = [set(build_outside(m, family.cycle(j)).edges()) for j in range(1, m + 1)]
        for i in range(m):
            for j in range(m):
                assert not patched[i] & outside[j]
                if i != j:
                    assert not patched[i] & patched[j]

    @pytest.mark.parametrize("n,expected", [
        (2, (4, 4, 2, 0)),
        (4, (16, 32, 4, 7)),
        (8, (256, 1024, 8, 381)),
        (16, (65536, 524288, 16, 229369)),
    ])
    def test_prediction(self, n, expected):
        assert tuple(hypercube_embedding_prediction(n)) == expected


class TestPerfectMatchingType:

    def test_matchings_are_partner_maps(self, q4):
        dec, _ = q4
        assert all(isinstance(m, PerfectMatching) and m.vertex_count == 16 for m in dec)
