import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from widecolor.chromatic import chromatic_number
from widecolor.errors import CapExceeded
from widecolor.graph import (
    Graph,
    Status,
    complete_graph,
    cycle_graph,
    is_bipartite,
    is_isomorphic_small,
    kneser_graph,
    max_degree,
    odd_girth,
    walk_reach,
    walk_relation,
)

from oracles import brute_odd_girth, random_graph, walk_pairs


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


class TestConstruction:
    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_parallel_edges_collapse(self):
        G = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert G.m == 1

    def test_labels_must_be_distinct(self):
        with pytest.raises(ValueError):
            Graph(2, [], labels=["a", "a"])
        with pytest.raises(ValueError):
            Graph(2, [], labels=["a"])

    @pytest.mark.parametrize("t,m", [(1, 0), (3, 3), (5, 10)])
    def test_complete(self, t, m):
        G = complete_graph(t)
        assert (G.n, G.m) == (t, m)

    def test_cycle(self):
        assert cycle_graph(3).edges == complete_graph(3).edges
        C9 = cycle_graph(9)
        assert (C9.n, C9.m) == (9, 9)
        assert odd_girth(cycle_graph(5)) == 5
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_petersen(self):
        P = kneser_graph(5, 2)
        assert (P.n, P.m) == (10, 15)
        assert all(d == 3 for d in P.degrees())
        assert nx.is_isomorphic(to_nx(P), nx.petersen_graph())

    @pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (8, 4)])
    def test_kneser_2k_is_perfect_matching(self, n, k):
        G = kneser_graph(n, k)
        assert all(d == 1 for d in G.degrees())
        assert G.m * 2 == G.n

    def test_kneser_edges_are_exactly_disjoint_pairs(self):
        G = kneser_graph(7, 3)
        for u in range(G.n):
            for v in range(u + 1, G.n):
                assert G.has_edge(u, v) == (not set(G.labels[u]) & set(G.labels[v]))

    def test_kneser_t1_is_complete(self):
        assert kneser_graph(6, 1).edges == complete_graph(6).edges
        with pytest.raises(ValueError):
            kneser_graph(3, 2)

    def test_transitive_flag_only_from_constructors(self):
        assert kneser_graph(5, 2).transitive and cycle_graph(7).transitive
        assert not Graph(3, [(0, 1), (1, 2), (0, 2)]).transitive

    def test_deletions(self):
        P = kneser_graph(5, 2)
        assert P.delete_edge(*P.sorted_edges()[0]).m == 14
        Q = P.delete_vertex(0)
        assert (Q.n, Q.m) == (9, 12)
        u, v = next((u, v) for u in range(10) for v in range(u + 1, 10) if not P.has_edge(u, v))
        with pytest.raises(KeyError):
            P.delete_edge(u, v)


class TestWalks:
    def test_c4_length_two_returns(self):
        R = walk_relation(cycle_graph(4), 2)
        assert all(R.related(u, u) for u in range(4))

    def test_c9_length_three(self):
        R = walk_relation(cycle_graph(9), 3)
        assert R.related(0, 3) and not R.related(0, 2)

    def test_zero_length_is_identity(self):
        G = kneser_graph(5, 2)
        assert np.array_equal(walk_relation(G, 0).matrix, np.eye(G.n, dtype=bool))

    def test_against_walk_enumeration(self):
        rng = random.Random(3)
        for _ in range(60):
            G = random_graph(rng, rng.randint(1, 9), rng.random())
            L = rng.randint(0, 6)
            R = walk_relation(G, L)
            got = {(u, v) for u in range(G.n) for v in range(G.n) if R.related(u, v)}
            assert got == walk_pairs(G, L)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=20), st.integers(0, 10))
    def test_extend_matches_next_length(self, G, L):
        R = walk_relation(G, L)
        assert np.array_equal(R.extend(G).matrix, walk_relation(G, L + 1).matrix)
        assert np.array_equal(R.matrix, R.matrix.T)

    def test_walk_reach_matches_relation(self):
        G = kneser_graph(5, 2)
        R = walk_relation(G, 3)
        for v in range(G.n):
            assert np.array_equal(walk_reach(G, [v], 3), R.matrix[v])


class TestOddGirth:
    def test_examples(self):
        assert odd_girth(cycle_graph(9)) == 9
        assert odd_girth(kneser_graph(4, 2)) is None
        assert odd_girth(kneser_graph(5, 2)) == 5

    def test_against_trace_oracle(self):
        rng = random.Random(11)
        for _ in range(150):
            G = random_graph(rng, rng.randint(1, 10), rng.random() * 0.6)
            assert odd_girth(G) == brute_odd_girth(G)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8))
    def test_absent_iff_two_colorable(self, G):
        g = odd_girth(G)
        assert g is None or g % 2 == 1
        assert (g is None) == (chromatic_number(G) <= 2)
        assert is_bipartite(G) == nx.is_bipartite(to_nx(G))


def test_max_degree():
    assert max_degree(cycle_graph(9)) == 2
    assert max_degree(complete_graph(5)) == 4
    assert max_degree(Graph(0, [])) == 0


class TestIsomorphism:
    def test_examples(self):
        r = is_isomorphic_small(kneser_graph(5, 2), Graph(10, kneser_graph(5, 2).edges))
        assert r.status is Status.FOUND
        assert is_isomorphic_small(cycle_graph(9), cycle_graph(7)).status is Status.NONE

    def test_against_networkx(self):
        rng = random.Random(5)
        for _ in range(120):
            n = rng.randint(1, 8)
            G = random_graph(rng, n, rng.random())
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                H = Graph(n, [(perm[u], perm[v]) for u, v in G.edges])
            else:
                H = random_graph(rng, n, rng.random())
            r = is_isomorphic_small(G, H)
            assert r.status is not Status.EXHAUSTED
            assert bool(r) == nx.is_isomorphic(to_nx(G), to_nx(H))
            if r:
                m = r.mapping
                assert sorted(m) == list(range(n))
                assert {tuple(sorted((m[u], m[v]))) for u, v in G.edges} == set(H.edges)

    def test_budget_is_a_third_state(self):
        P = kneser_graph(5, 2)
        perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4]
        H = Graph(10, [(perm[u], perm[v]) for u, v in P.edges])
        r = is_isomorphic_small(P, H, budget=1)
        assert r.status in (Status.EXHAUSTED, Status.FOUND)
        assert is_isomorphic_small(P, H).status is Status.FOUND

    def test_cap(self):
        with pytest.raises(CapExceeded):
            is_isomorphic_small(cycle_graph(70), cycle_graph(70))
