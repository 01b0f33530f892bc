import random
from fractions import Fraction

import networkx as nx
import pytest

from widecolor.chromatic import (
    KFoldColoring,
    chromatic_number,
    fractional_chromatic,
    fractional_chromatic_lp,
    fractional_lower_bound_from_odd_girth,
    greedy_dsatur,
    is_edge_color_critical,
    is_vertex_color_critical,
    k_coloring,
    kneser_chromatic,
    lower_bound_multichrom,
    maximal_independent_sets,
    multichromatic_number,
    optimal_coloring,
    relation_holds,
    sandwich_report,
)
from widecolor.errors import BudgetExhausted, CapExceeded
from widecolor.graph import Graph, complete_graph, cycle_graph, kneser_graph
from widecolor.mycielski import groetzsch_graph
from widecolor.universal import build_W

from oracles import brute_chromatic, brute_maximal_independent_sets, random_graph

PETERSEN = kneser_graph(5, 2)


class TestChromatic:
    def test_against_brute_force(self):
        rng = random.Random(17)
        for _ in range(120):
            G = random_graph(rng, rng.randint(0, 8), rng.random())
            c = optimal_coloring(G)
            assert c.k == brute_chromatic(G)
            assert c.is_proper(G)

    def test_greedy_is_proper_upper_bound(self):
        rng = random.Random(1)
        for _ in range(50):
            G = random_graph(rng, rng.randint(1, 12), 0.4)
            c = greedy_dsatur(G)
            assert c.is_proper(G) and c.k >= chromatic_number(G)

    @pytest.mark.parametrize("G,chi", [(cycle_graph(9), 3), (cycle_graph(8), 2), (complete_graph(5), 5),
                                       (PETERSEN, 3), (groetzsch_graph(), 4), (Graph(3, []), 1)])
    def test_examples(self, G, chi):
        assert chromatic_number(G) == chi

    @pytest.mark.parametrize("s,t", [(1, 4), (2, 3), (2, 4), (3, 3), (4, 3)])
    def test_w(self, s, t):
        assert chromatic_number(build_W(s, t)) == t

    def test_k_coloring(self):
        assert k_coloring(cycle_graph(9), 2) is None
        c = k_coloring(cycle_graph(9), 3)
        assert c.is_proper(cycle_graph(9))

    def test_budget_interval(self):
        with pytest.raises(BudgetExhausted) as exc:
            chromatic_number(build_W(2, 5), budget=100)
        assert exc.value.lower <= 5 <= exc.value.upper

    def test_cap(self):
        with pytest.raises(CapExceeded):
            chromatic_number(build_W(3, 5))


class TestKneser:
    @pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2), (7, 3), (6, 3), (7, 2)])
    def test_formula_matches_solver(self, n, k):
        assert kneser_chromatic(n, k) == chromatic_number(kneser_graph(n, k))

    def test_domain(self):
        assert kneser_chromatic(6, 3) == 2
        with pytest.raises(ValueError):
            kneser_chromatic(3, 2)


class TestIndependentSets:
    def test_against_brute_force(self):
        rng = random.Random(23)
        for _ in range(80):
            G = random_graph(rng, rng.randint(0, 9), rng.random())
            assert maximal_independent_sets(G) == brute_maximal_independent_sets(G)

    def test_against_networkx_cliques(self):
        G = build_W(2, 4)
        H = nx.complement(nx.Graph(list(G.edges)))
        H.add_nodes_from(range(G.n))
        want = sorted(tuple(sorted(c)) for c in nx.find_cliques(H))
        assert maximal_independent_sets(G) == want

    def test_cap(self):
        with pytest.raises(CapExceeded):
            maximal_independent_sets(Graph(20, [(2 * i, 2 * i + 1) for i in range(10)]), cap=100)


class TestFractional:
    @pytest.mark.parametrize("b", range(1, 8))
    def test_odd_cycles(self, b):
        assert fractional_chromatic(cycle_graph(2 * b + 1)) == Fraction(2 * b + 1, b)

    @pytest.mark.parametrize("G,val", [(complete_graph(4), 4), (PETERSEN, Fraction(5, 2)),
                                       (groetzsch_graph(), Fraction(29, 10)), (cycle_graph(6), 2),
                                       (kneser_graph(6, 2), 3)])
    def test_examples(self, G, val):
        assert fractional_chromatic(G) == val

    def test_certificates(self):
        r = fractional_chromatic_lp(groetzsch_graph())
        assert sum(r.weights.values()) == r.value == sum(r.clique)
        assert all(isinstance(w, Fraction) for w in r.weights.values())

    def test_bounds_on_w(self):
        for s, t in [(2, 3), (2, 4), (3, 3)]:
            W = build_W(s, t)
            val = fractional_chromatic(W)
            assert fractional_lower_bound_from_odd_girth(W) <= val <= Fraction(t + 2 * (s - 1), s)
        assert fractional_chromatic(build_W(2, 4)) == Fraction(52, 21)

    def test_between_clique_and_chromatic(self):
        rng = random.Random(29)
        for _ in range(40):
            G = random_graph(rng, rng.randint(1, 9), rng.random())
            val = fractional_chromatic(G)
            clique = max((len(c) for c in nx.find_cliques(nx.Graph(list(G.edges)))), default=1)
            assert clique <= val <= brute_chromatic(G)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            fractional_chromatic(build_W(2, 5))

    def test_odd_girth_bound(self):
        assert fractional_lower_bound_from_odd_girth(cycle_graph(9)) == Fraction(9, 4)
        assert fractional_lower_bound_from_odd_girth(PETERSEN) == Fraction(5, 2) == fractional_chromatic(PETERSEN)
        assert fractional_lower_bound_from_odd_girth(complete_graph(3)) == 3
        with pytest.raises(ValueError):
            fractional_lower_bound_from_odd_girth(cycle_graph(6))


class TestMultichromatic:
    @pytest.mark.parametrize("G,k,val", [(cycle_graph(9), 2, 5), (complete_graph(3), 1, 3),
                                         (cycle_graph(5), 2, 5), (PETERSEN, 2, 5), (cycle_graph(7), 3, 7)])
    def test_examples(self, G, k, val):
        r = multichromatic_number(G, k)
        assert r.value == val
        assert r.coloring.is_valid(G)

    def test_c5_refutation_trail(self):
        assert multichromatic_number(cycle_graph(5), 2).refuted == [4]

    def test_fractional_start(self):
        r = multichromatic_number(cycle_graph(5), 2, fractional=Fraction(5, 2))
        assert r.value == 5 and r.refuted == []

    def test_sandwich(self):
        rng = random.Random(31)
        for _ in range(15):
            G = random_graph(rng, rng.randint(2, 6), 0.5)
            if G.m == 0:
                continue
            chi, chif = chromatic_number(G), fractional_chromatic(G)
            assert multichromatic_number(G, 1).value == chi
            for k in (2, 3):
                val = multichromatic_number(G, k).value
                assert k * chif <= val <= k * chi

    def test_kfold_validity(self):
        C = cycle_graph(5)
        good = KFoldColoring(2, 5, ((1, 2), (3, 4), (5, 1), (2, 3), (4, 5)))
        assert good.is_valid(C)
        assert not KFoldColoring(2, 5, ((1, 2), (2, 3), (4, 5), (1, 3), (4, 5))).is_valid(C)

    def test_lower_bound_formula(self):
        assert lower_bound_multichrom(3, 7, 3) == 11
        assert lower_bound_multichrom(2, 5, 1) == 5
        assert lower_bound_multichrom(2, 3, 2) == 5 == multichromatic_number(build_W(2, 3), 2).value
        with pytest.raises(ValueError):
            lower_bound_multichrom(0, 3, 1)

    def test_w_matches_lower_bound(self):
        W = build_W(2, 4)
        assert multichromatic_number(W, 2).value == lower_bound_multichrom(2, 4, 2)


class TestCriticality:
    def test_odd_cycle(self):
        assert is_edge_color_critical(cycle_graph(9))
        assert is_vertex_color_critical(cycle_graph(9))

    def test_w24(self):
        assert is_edge_color_critical(build_W(2, 4))

    def test_groetzsch(self):
        assert is_vertex_color_critical(groetzsch_graph())

    def test_non_critical(self):
        G = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert not is_edge_color_critical(G)
        assert not is_vertex_color_critical(G)


class TestSandwich:
    @pytest.mark.parametrize("s", [2, 3])
    def test_cycle_case(self, s):
        rels = sandwich_report(s, 2)
        assert all(relation_holds(r) for r in rels)
        strict = [r for r in rels if r.strict]
        assert strict and all(r.reverse == "refuted" for r in strict)

    def test_s1(self):
        rels = sandwich_report(1, 3)
        assert [r.kind for r in rels] == ["iso", "iso"]
        assert all(r.status == "confirmed" for r in rels)

    def test_general_case_small(self):
        rels = sandwich_report(2, 3, budget=200_000)
        assert len(rels) == 2
        assert all(relation_holds(r) in (True, None) for r in rels)
        assert rels[1].how.startswith("explicit")
