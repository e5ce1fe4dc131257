import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchext import (
    Graph,
    Budget,
    BudgetExceededError,
    FailureKind,
    Failure,
    InvalidParametersError,
    Matching,
    VertexSet,
    check_parameters,
    complete_graph,
    disjoint_union,
    is_k_extendable,
    is_n_factor_critical,
    is_nk_extendable,
    verify_failure_witness,
)
from matchext.families import build_h1

from conftest import cycle_graph, graphs, star_graph
from oracles import naive_is_nk_extendable


class TestParameterCheck:
    def test_examples(self):
        k4 = complete_graph(4)
        ok = check_parameters(k4, 2, 0)
        assert ok.size_ok and ok.parity_ok and ok.ok
        assert not check_parameters(k4, 1, 0).parity_ok
        assert not check_parameters(k4, 0, 2).size_ok

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            check_parameters(complete_graph(4), -1, 0)

    def test_invalid_parameters_error_carries_check(self):
        with pytest.raises(InvalidParametersError) as exc:
            is_nk_extendable(complete_graph(4), 1, 0)
        assert exc.value.check.parity_ok is False
        assert exc.value.check.n == 1


class TestVerdicts:
    def test_one_factor_graphs_are_0_0_extendable(self):
        for g in (complete_graph(2), complete_graph(4), cycle_graph(6)):
            assert is_nk_extendable(g, 0, 0).holds

    def test_k4_is_2_critical(self):
        verdict = is_nk_extendable(complete_graph(4), 2, 0)
        assert verdict.holds and verdict.failure is None
        assert verdict.stats.subsets_examined == 6

    def test_c6_is_1_extendable(self):
        assert naive_is_nk_extendable(cycle_graph(6), 0, 1)
        assert is_nk_extendable(cycle_graph(6), 0, 1).holds

    def test_k4_is_1_extendable(self):
        assert is_k_extendable(complete_graph(4), 1).holds

    def test_star_plus_isolated_is_not_0_extendable(self):
        # K_{1,3} with two isolated vertices: even order, no 1-factor.
        g = disjoint_union([star_graph(3), complete_graph(1), complete_graph(1)])
        verdict = is_k_extendable(g, 0)
        assert not verdict.holds
        assert verdict.failure.kind is FailureKind.STUCK_MATCHING
        assert verdict.failure.m.size == 0

    def test_odd_order_graph_without_factor_is_inadmissible_at_0_0(self):
        # K_{1,3} plus one isolated vertex has odd order; (0, 0) violates
        # parity and is a hard error rather than a false verdict.
        g = disjoint_union([star_graph(3), complete_graph(1)])
        with pytest.raises(InvalidParametersError):
            is_k_extendable(g, 0)

    def test_k5_and_c5_are_1_critical(self):
        assert is_n_factor_critical(complete_graph(5), 1).holds
        assert is_n_factor_critical(cycle_graph(5), 1).holds

    def test_star_is_not_1_critical(self):
        # K_{1,4}: deleting the center leaves 4 isolated vertices. (K_{1,3}
        # would be parity-inadmissible for n=1.)
        verdict = is_n_factor_critical(star_graph(4), 1)
        assert not verdict.holds
        assert verdict.failure.s.members == (0,)

    def test_h1_2_0_exact_witness(self):
        fam = build_h1(2, 0)
        verdict = is_nk_extendable(fam.graph, 2, 2)
        assert not verdict.holds
        f = verdict.failure
        assert f.kind is FailureKind.STUCK_MATCHING
        assert f.s == fam.core
        assert f.m == fam.pendant_matching
        assert f.tutte.s_prime.members == ()
        assert f.tutte.deficiency_excess == 2
        assert {c.members for c in f.tutte.odd_components} == {
            (0, 1, 2, 3, 4),
            (5, 6, 7, 8, 9),
        }

    def test_no_k_matching_failure(self):
        # 4 isolated vertices: (0, 1) admissible but there is no 1-matching.
        verdict = is_k_extendable(disjoint_union([complete_graph(1)] * 4), 1)
        assert not verdict.holds
        assert verdict.failure.kind is FailureKind.NO_K_MATCHING
        assert verdict.failure.s.members == ()
        assert verdict.failure.m is None


class TestLargeGraphFallback:
    def test_cycle_20_uses_lazy_oracle(self):
        # Above the dense-table limit the search runs blossom per subset.
        g = cycle_graph(20)
        verdict = is_nk_extendable(g, 0, 1)
        assert verdict.holds
        assert verdict.stats.pairs_examined == 20

    def test_cycle_20_plus_isolated_vertices_fails(self):
        # 22 vertices: any 1-matching strands the two isolated vertices.
        g = disjoint_union([cycle_graph(20), Graph(1), Graph(1)])
        verdict = is_nk_extendable(g, 0, 1)
        assert not verdict.holds
        assert verdict.failure.kind is FailureKind.STUCK_MATCHING
        assert verify_failure_witness(g, 0, 1, verdict.failure)


class TestOracleEquivalence:
    @settings(max_examples=100, deadline=None)
    @given(graphs(max_vertices=7), st.integers(0, 2), st.integers(0, 1))
    def test_matches_naive_double_loop(self, g, n, k):
        if not check_parameters(g, n, k).ok:
            return
        assert is_nk_extendable(g, n, k).holds == naive_is_nk_extendable(g, n, k)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_vertices=8), st.integers(0, 2))
    def test_specialization_coherence(self, g, p):
        if check_parameters(g, 0, p).ok:
            assert is_k_extendable(g, p).holds == is_nk_extendable(g, 0, p).holds
        if check_parameters(g, p, 0).ok:
            assert is_n_factor_critical(g, p).holds == is_nk_extendable(g, p, 0).holds


class TestWitnessValidity:
    @settings(max_examples=100, deadline=None)
    @given(graphs(max_vertices=8), st.integers(0, 2), st.integers(0, 1))
    def test_failures_reverify(self, g, n, k):
        if not check_parameters(g, n, k).ok:
            return
        verdict = is_nk_extendable(g, n, k)
        if verdict.holds:
            return
        assert verify_failure_witness(g, n, k, verdict.failure)

    def test_tampered_witness_rejected(self):
        fam = build_h1(2, 0)
        verdict = is_nk_extendable(fam.graph, 2, 2)
        good = verdict.failure
        assert verify_failure_witness(fam.graph, 2, 2, good)
        wrong_s = Failure(kind=good.kind, s=VertexSet.of([0, 1]), m=good.m, tutte=good.tutte)
        assert not verify_failure_witness(fam.graph, 2, 2, wrong_s)
        wrong_kind = Failure(kind=FailureKind.NO_K_MATCHING, s=good.s)
        assert not verify_failure_witness(fam.graph, 2, 2, wrong_kind)
        wrong_m = Failure(
            kind=good.kind, s=good.s, m=Matching.of([(0, 1), (2, 3)]), tutte=good.tutte
        )
        assert not verify_failure_witness(fam.graph, 2, 2, wrong_m)


class TestBudget:
    def test_pair_cap_aborts(self):
        fam = build_h1(2, 0)
        budget = Budget(pair_cap=10)
        with pytest.raises(BudgetExceededError):
            is_nk_extendable(fam.graph, 2, 2, budget=budget)

    def test_zero_timeout_aborts(self):
        budget = Budget.from_limits(0.0, None)
        with pytest.raises(BudgetExceededError):
            is_nk_extendable(complete_graph(6), 2, 1, budget=budget)

    def test_no_limits_is_none(self):
        assert Budget.from_limits(None, None) is None

    def test_stats_are_counted(self):
        verdict = is_nk_extendable(complete_graph(6), 0, 1)
        assert verdict.stats.subsets_examined == 1
        assert verdict.stats.pairs_examined == 15
