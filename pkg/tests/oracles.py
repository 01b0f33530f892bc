"""Slow, obviously-correct reference implementations used only by the tests."""

from itertools import combinations, product

import numpy as np

from widecolor.graph import Graph


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def adjacency(G):
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1
    return A


def all_maps(nF, nG):
    """Every map V(F) -> V(G) as rows of an (nG**nF, nF) array."""
    if nF == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(nG)] * nF, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def hom_exists(F, G):
    """Enumerate all |V(G)|^|V(F)| maps at once with numpy."""
    if F.n == 0:
        return True
    if G.n == 0:
        return False
    maps = all_maps(F.n, G.n)
    A = adjacency(G).astype(bool)
    ok = np.ones(len(maps), dtype=bool)
    for u, v in F.edges:
        ok &= A[maps[:, u], maps[:, v]]
    return bool(ok.any())


def walk_pairs(G, L):
    """Pairs (u, v) joined by a walk of exactly L edges, by explicit walk enumeration."""
    nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]
    out = set()
    for start in range(G.n):
        frontier = [start]
        for _ in range(L):
            frontier = sorted({w for u in frontier for w in nbrs[u]})
        out.update((start, v) for v in frontier)
    return out


def brute_odd_girth(G):
    A = adjacency(G)
    P = np.eye(G.n, dtype=object)
    Ao = A.astype(object)
    for L in range(1, G.n + 1):
        P = P.dot(Ao)
        if L % 2 == 1 and any(P[i, i] for i in range(G.n)):
            return L
    return None


def brute_chromatic(G):
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        for cols in product(range(k), repeat=G.n):
            if all(cols[u] != cols[v] for u, v in G.edges):
                return k
    raise AssertionError


def brute_maximal_independent_sets(G):
    out = []
    verts = range(G.n)
    for r in range(G.n + 1):
        for S in combinations(verts, r):
            Sset = set(S)
            if any(G.has_edge(u, v) for u, v in combinations(S, 2)):
                continue
            if all(v in Sset or any(G.has_edge(v, u) for u in S) for v in verts):
                out.append(tuple(S))
    return sorted(out)


def brute_W(s, t):
    verts = [x for x in product(range(s + 1), repeat=t) if x.count(0) == 1 and 1 in x]
    edges = set()
    for x, y in combinations(verts, 2):
        if all(abs(a - b) == 1 or a == b == s for a, b in zip(x, y)):
            edges.add((x, y))
    return verts, edges


def brute_Omega(s, t):
    """Chains straight from the definition over all tuples of subsets of {1..t}."""
    subsets = [frozenset(c) for r in range(t + 1) for c in combinations(range(1, t + 1), r)]
    verts = []
    for A in product(subsets, repeat=s):
        if len(A[0]) != 1 or not A[1]:
            continue
        if not all(A[i] <= A[i + 2] for i in range(s - 2)):
            continue
        if A[s - 2] & A[s - 1]:
            continue
        verts.append(A)
    edges = set()
    for A, B in combinations(verts, 2):
        if all(A[i] <= B[i + 1] and B[i] <= A[i + 1] for i in range(s - 1)) and not (A[s - 1] & B[s - 1]):
            edges.add((A, B))
    return verts, edges
