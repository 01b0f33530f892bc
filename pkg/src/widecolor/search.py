"""Exhaustive homomorphism search with arc consistency.

This is deliberately independent of the explicit constructions: it only
sees adjacency. Domains are bitmasks over the target's vertices, and after
every assignment arc consistency is restored along the source edges (for an
edge uw, the domain of w is cut down to the neighborhood of u's domain).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, Status
from .homomorphism import VertexMap, verify_homomorphism

DEFAULT_BUDGET = 2_000_000


@dataclass
class SearchResult:
    status: Status
    map: VertexMap | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    @property
    def refuted(self) -> bool:
        return self.status is Status.NONE

    @property
    def exhausted(self) -> bool:
        return self.status is Status.EXHAUSTED


class _OutOfBudget(Exception):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def search_homomorphism(F: Graph, G: Graph, budget: int = DEFAULT_BUDGET, symmetry: bool = True) -> SearchResult:
    """Find a homomorphism F -> G, prove there is none, or run out of budget.

    Variables are chosen by smallest domain, ties broken by higher degree in
    F and then by index. When G is flagged vertex-transitive the very first
    variable is only tried on one value. ``budget`` bounds the number of
    value assignments tried.
    """
    nF, nG = F.n, G.n
    if nF == 0:
        return SearchResult(Status.FOUND, VertexMap(F, G, ()), 0)
    if nG == 0:
        return SearchResult(Status.NONE, None, 0)
    gmask = [0] * nG
    for a, b in G.edges:
        gmask[a] |= 1 << b
        gmask[b] |= 1 << a
    fnbrs = [sorted(F.neighbors(u)) for u in range(nF)]
    fdeg = [len(x) for x in fnbrs]
    full = (1 << nG) - 1
    nonisolated = 0
    for g in range(nG):
        if gmask[g]:
            nonisolated |= 1 << g

    def reach(mask):
        out = 0
        for b in _bits(mask):
            out |= gmask[b]
        return out

    def propagate(D, queue):
        # queue holds vertices whose domain shrank
        while queue:
            u = queue.pop()
            if not fnbrs[u]:
                continue
            support = reach(D[u])
            for w in fnbrs[u]:
                nd = D[w] & support
                if nd != D[w]:
                    if not nd:
                        return False
                    D[w] = nd
                    queue.add(w)
        return True

    D0 = [nonisolated if fdeg[u] else full for u in range(nF)]
    if any(d == 0 for d in D0) or not propagate(D0, set(range(nF))):
        return SearchResult(Status.NONE, None, 0)

    nodes = 0
    assigned = [False] * nF

    def solve(D, depth):
        nonlocal nodes
        best, best_key = -1, None
        for u in range(nF):
            if not assigned[u]:
                key = (bin(D[u]).count("1"), -fdeg[u], u)
                if best_key is None or key < best_key:
                    best, best_key = u, key
        if best < 0:
            return D
        u = best
        values = list(_bits(D[u]))
        if depth == 0 and symmetry and G.transitive:
            values = values[:1]
        assigned[u] = True
        for a in values:
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            E = list(D)
            E[u] = 1 << a
            if propagate(E, {u}):
                res = solve(E, depth + 1)
                if res is not None:
                    return res
        assigned[u] = False
        return None

    try:
        sol = solve(D0, 0)
    except _OutOfBudget:
        return SearchResult(Status.EXHAUSTED, None, nodes)
    if sol is None:
        return SearchResult(Status.NONE, None, nodes)
    images = [d.bit_length() - 1 for d in sol]
    m = VertexMap(F, G, images, policy="search")
    if not verify_homomorphism(F, G, m):
        raise AssertionError("search produced a map that does not verify")
    return SearchResult(Status.FOUND, m, nodes)
