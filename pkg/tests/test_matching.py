import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchext import (
    Graph,
    Matching,
    NotAMatchingError,
    OddOrderError,
    OutOfRangeError,
    OverlapError,
    SubsetMatchingOracle,
    VertexSet,
    complete_graph,
    components,
    delete_vertices,
    disjoint_union,
    enumerate_k_matchings,
    enumerate_one_factors,
    find_tutte_certificate,
    has_extension,
    has_near_one_factor,
    has_one_factor,
    maximum_matching,
)
from matchext.families import build_h1

from conftest import cycle_graph, graphs, petersen_graph, star_graph
from oracles import (
    brute_max_deficiency,
    brute_max_matching_size,
    matchings_by_combinations,
)


class TestMatchingType:
    def test_of_canonicalizes(self):
        m = Matching.of([(3, 2), (0, 1)])
        assert m.edges == ((0, 1), (2, 3))
        assert m.size == 2
        assert m.covers(3) and not m.covers(4)
        assert m.vertices == {0, 1, 2, 3}

    def test_rejects_overlap(self):
        with pytest.raises(NotAMatchingError):
            Matching.of([(0, 1), (1, 2)])

    def test_rejects_unsorted_direct_construction(self):
        with pytest.raises(NotAMatchingError):
            Matching(((2, 3), (0, 1)))


class TestMaximumMatching:
    def test_small_cases(self):
        assert maximum_matching(complete_graph(4)).size == 2
        assert maximum_matching(star_graph(3)).size == 1
        assert maximum_matching(Graph(0)).size == 0
        assert maximum_matching(Graph(5)).size == 0

    def test_petersen(self):
        g = petersen_graph()
        assert brute_max_matching_size(g) == 5
        assert maximum_matching(g).size == 5

    def test_deterministic(self):
        g = petersen_graph()
        assert maximum_matching(g) == maximum_matching(petersen_graph())

    def test_result_is_valid_matching_of_host(self):
        g = petersen_graph()
        m = maximum_matching(g)
        assert all(g.has_edge(u, v) for u, v in m.edges)

    @settings(max_examples=150)
    @given(graphs(max_vertices=9))
    def test_agrees_with_brute_force(self, g):
        assert maximum_matching(g).size == brute_max_matching_size(g)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_vertices=8))
    def test_tutte_berge_formula(self, g):
        deficiency = g.vertex_count - 2 * maximum_matching(g).size
        assert deficiency == brute_max_deficiency(g)


class TestFactorPredicates:
    def test_one_factor(self):
        assert has_one_factor(complete_graph(2))
        assert has_one_factor(Graph(0))
        assert not has_one_factor(star_graph(3))
        assert not has_one_factor(disjoint_union([complete_graph(5)] * 2))

    def test_near_one_factor(self):
        assert has_near_one_factor(complete_graph(3))
        assert has_near_one_factor(complete_graph(1))
        assert not has_near_one_factor(Graph(3))
        assert not has_near_one_factor(complete_graph(2))


class TestEnumeration:
    def test_k4_single_edges(self):
        ms = list(enumerate_k_matchings(complete_graph(4), 1))
        assert [m.edges for m in ms] == [
            ((0, 1),), ((0, 2),), ((0, 3),), ((1, 2),), ((1, 3),), ((2, 3),)
        ]

    def test_k4_perfect(self):
        ms = list(enumerate_k_matchings(complete_graph(4), 2))
        assert [m.edges for m in ms] == [
            ((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))
        ]

    def test_c6_three_matchings(self):
        assert len(matchings_by_combinations(cycle_graph(6), 3)) == 2
        assert len(list(enumerate_k_matchings(cycle_graph(6), 3))) == 2

    def test_zero_matching(self):
        assert [m.edges for m in enumerate_k_matchings(Graph(3), 0)] == [()]

    @settings(max_examples=80)
    @given(graphs(max_vertices=7), st.integers(0, 3))
    def test_counts_match_combinations(self, g, k):
        expected = matchings_by_combinations(g, k)
        got = [m.edges for m in enumerate_k_matchings(g, k)]
        assert got == sorted(expected)
        assert len(set(got)) == len(got)

    def test_one_factor_counts(self):
        assert len(list(enumerate_one_factors(complete_graph(2)))) == 1
        assert len(list(enumerate_one_factors(complete_graph(4)))) == 3
        assert len(list(enumerate_one_factors(complete_graph(6)))) == 15

    def test_one_factor_of_empty_graph(self):
        assert [m.edges for m in enumerate_one_factors(Graph(0))] == [()]

    def test_odd_order_rejected(self):
        with pytest.raises(OddOrderError):
            list(enumerate_one_factors(complete_graph(3)))

    @settings(max_examples=60)
    @given(graphs(max_vertices=8))
    def test_one_factors_are_perfect_and_ordered(self, g):
        if g.vertex_count % 2 == 1:
            return
        factors = list(enumerate_one_factors(g))
        assert [f.edges for f in factors] == sorted(
            m for m in (f.edges for f in factors)
        )
        for f in factors:
            assert f.vertices == set(range(g.vertex_count))
            assert all(g.has_edge(u, v) for u, v in f.edges)
        expected = [
            m
            for m in matchings_by_combinations(g, g.vertex_count // 2)
        ]
        assert len(factors) == len(expected)


class TestTutteCertificate:
    def test_star(self):
        cert = find_tutte_certificate(star_graph(3))
        assert cert.s_prime.members == (0,)
        assert len(cert.odd_components) == 3
        assert cert.deficiency_excess == 2

    def test_two_triangles(self):
        cert = find_tutte_certificate(disjoint_union([complete_graph(3)] * 2))
        assert cert.s_prime.members == ()
        assert len(cert.odd_components) == 2
        assert cert.deficiency_excess == 2

    def test_absent_for_k4(self):
        assert find_tutte_certificate(complete_graph(4)) is None

    def test_absent_for_odd_order(self):
        assert find_tutte_certificate(complete_graph(3)) is None

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_vertices=8))
    def test_present_iff_no_one_factor(self, g):
        if g.vertex_count % 2 == 1:
            assert find_tutte_certificate(g) is None
            return
        cert = find_tutte_certificate(g)
        if has_one_factor(g):
            assert cert is None
            return
        assert cert is not None
        assert cert.deficiency_excess >= 2
        assert cert.deficiency_excess % 2 == 0
        # The excess must be the maximum deficiency and must recompute from
        # graph-core components alone.
        assert cert.deficiency_excess == brute_max_deficiency(g)
        reduced, remap = delete_vertices(g, cert.s_prime)
        report = components(reduced)
        odd = {
            tuple(remap.old_of(v) for v in c.members)
            for c in report.components
            if len(c) % 2 == 1
        }
        assert odd == {c.members for c in cert.odd_components}
        assert report.odd_count - len(cert.s_prime) == cert.deficiency_excess


class TestSubsetOracle:
    @settings(max_examples=60)
    @given(graphs(max_vertices=7), st.data())
    def test_matches_blossom_on_masks(self, g, data):
        oracle = SubsetMatchingOracle(g)
        mask = data.draw(st.integers(0, oracle.full_mask)) if oracle.full_mask else 0
        keep = [v for v in range(g.vertex_count) if mask >> v & 1]
        drop = [v for v in range(g.vertex_count) if v not in keep]
        sub, _ = delete_vertices(g, VertexSet.of(drop))
        assert oracle.size(mask) == maximum_matching(sub).size

    def test_lazy_fallback_above_dense_limit(self):
        # 20 vertices forces the per-mask blossom path.
        g = Graph(20, [(i, i + 1) for i in range(19)] + [(0, 19)])
        oracle = SubsetMatchingOracle(g)
        assert oracle._table is None
        full = oracle.full_mask
        assert oracle.size(full) == 10
        sub_mask = (1 << 7) - 1  # path on vertices 0..6
        assert oracle.size(sub_mask) == 3
        assert oracle.is_perfectable(full)
        assert not oracle.is_perfectable(sub_mask)


class TestHasExtension:
    def test_basic(self):
        assert has_extension(complete_graph(4), VertexSet(), Matching.of([(0, 1)]))
        assert has_extension(
            complete_graph(6), VertexSet.of([0, 1]), Matching.of([(2, 3)])
        )

    def test_h1_core_pendants_blocked(self):
        fam = build_h1(2, 0)
        assert not has_extension(fam.graph, fam.core, fam.pendant_matching)

    def test_everything_deleted_is_vacuously_true(self):
        g = complete_graph(2)
        assert has_extension(g, VertexSet(), Matching.of([(0, 1)]))

    def test_overlap_rejected(self):
        with pytest.raises(OverlapError):
            has_extension(complete_graph(4), VertexSet.of([0]), Matching.of([(0, 1)]))

    def test_non_edge_rejected(self):
        with pytest.raises(NotAMatchingError):
            has_extension(cycle_graph(4), VertexSet(), Matching.of([(0, 2)]))

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            has_extension(complete_graph(4), VertexSet.of([7]), Matching())
