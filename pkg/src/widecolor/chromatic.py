"""Exact chromatic, multichromatic and fractional chromatic numbers at desk scale."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExhausted, CapExceeded
from .graph import Graph, Status, complete_graph, cycle_graph, is_isomorphic_small, kneser_graph, odd_girth
from .homomorphism import VertexMap
from .lp import solve_covering
from .mycielski import hom_W_to_mycielskian, mycielskian
from .search import search_homomorphism
from .universal import Coloring, build_W

CHROMATIC_VERTEX_CAP = 100
LP_VERTEX_CAP = 40
MIS_CAP = 100_000
DEFAULT_BUDGET = 5_000_000


def _masks(G: Graph) -> list[int]:
    out = [0] * G.n
    for u, v in G.edges:
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- proper colorings ------------------------------------------------------

def greedy_dsatur(G: Graph) -> Coloring:
    """DSATUR greedy coloring (upper bound for the exact solver)."""
    n = G.n
    colors = [0] * n
    adj = [sorted(G.neighbors(v)) for v in range(n)]
    sat = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if not colors[u]), key=lambda u: (len(sat[u]), len(adj[u]), -u))
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return Coloring(tuple(colors), max(colors, default=0))


def k_coloring(G: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Coloring | None:
    """A proper k-coloring of G, or None after exhaustive refutation.

    Backtracking picks the most constrained vertex (fewest remaining colors,
    then highest degree), prunes neighbors' color sets as it goes, and only
    ever opens one fresh color at a time. Raises BudgetExhausted.
    """
    n = G.n
    if n == 0:
        return Coloring((), max(k, 0))
    if k <= 0:
        return None
    adj = [sorted(G.neighbors(v)) for v in range(n)]
    deg = [len(a) for a in adj]
    dom = [(1 << k) - 1] * n
    col = [-1] * n
    nodes = 0

    def rec(placed, used):
        nonlocal nodes
        if placed == n:
            return True
        v, key = -1, None
        for u in range(n):
            if col[u] < 0:
                kk = (bin(dom[u]).count("1"), -deg[u])
                if key is None or kk < key:
                    v, key = u, kk
                    if kk[0] <= 1:
                        break
        options = dom[v] & ((1 << min(used + 1, k)) - 1)
        for c in _bits(options):
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"k-coloring search exceeded {budget} nodes", nodes=nodes)
            bit = 1 << c
            touched = []
            ok = True
            for w in adj[v]:
                if col[w] < 0 and dom[w] & bit:
                    dom[w] &= ~bit
                    touched.append(w)
                    if not dom[w]:
                        ok = False
                        break
            if ok:
                col[v] = c
                if rec(placed + 1, max(used, c + 1)):
                    return True
                col[v] = -1
            for w in touched:
                dom[w] |= bit
        return False

    if rec(0, 0):
        c = Coloring(tuple(x + 1 for x in col), k)
        assert c.is_proper(G)
        return c
    return None


def _max_clique_size(G: Graph) -> int:
    adj = _masks(G)
    best = 0

    def expand(size, P):
        nonlocal best
        if not P:
            best = max(best, size)
            return
        if size + bin(P).count("1") <= best:
            return
        for v in list(_bits(P)):
            if size + bin(P).count("1") <= best:
                return
            expand(size + 1, P & adj[v])
            P &= ~(1 << v)

    expand(0, (1 << G.n) - 1)
    return best


def chromatic_number(G: Graph, budget: int = DEFAULT_BUDGET, cap: int = CHROMATIC_VERTEX_CAP) -> int:
    """Exact chromatic number.

    Scans k upward from a clique/odd-cycle lower bound to the DSATUR upper
    bound. On budget exhaustion raises BudgetExhausted with the interval
    established so far in ``lower``/``upper``.
    """
    return optimal_coloring(G, budget, cap).k


def optimal_coloring(G: Graph, budget: int = DEFAULT_BUDGET, cap: int = CHROMATIC_VERTEX_CAP) -> Coloring:
    if G.n > cap:
        raise CapExceeded(f"exact coloring capped at {cap} vertices")
    if G.n == 0:
        return Coloring((), 0)
    upper = greedy_dsatur(G)
    lower = max(_max_clique_size(G), 1)
    if lower < 3 and odd_girth(G) is not None:
        lower = 3
    for k in range(lower, upper.k):
        try:
            c = k_coloring(G, k, budget)
        except BudgetExhausted as exc:
            raise BudgetExhausted(f"chromatic number of {G.name} undecided in [{k}, {upper.k}]",
                                  lower=k, upper=upper.k, nodes=exc.nodes) from None
        if c is not None:
            return c
    return upper


# -- criticality -------------------------------------------------------------

def is_edge_color_critical(G: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    k = chromatic_number(G, budget)
    return all(k_coloring(G.delete_edge(u, v), k - 1, budget) is not None for u, v in G.sorted_edges())


def is_vertex_color_critical(G: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    k = chromatic_number(G, budget)
    return all(k_coloring(G.delete_vertex(v), k - 1, budget) is not None for v in range(G.n))


# -- independent sets and the fractional chromatic number ----------------------

def maximal_independent_sets(G: Graph, cap: int = MIS_CAP) -> list[tuple[int, ...]]:
    """All maximal independent sets (Bron–Kerbosch with pivoting on the complement)."""
    n = G.n
    full = (1 << n) - 1
    adj = _masks(G)
    non = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(tuple(_bits(R)))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} maximal independent sets")
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & non[u]).count("1"))
        for v in list(_bits(P & ~non[pivot])):
            bit = 1 << v
            bk(R | bit, P & non[v], X & non[v])
            P &= ~bit
            X |= bit

    if not n:
        return [()]
    bk(0, full, 0)
    return sorted(out)


@dataclass
class FractionalResult:
    value: Fraction
    weights: dict[tuple[int, ...], Fraction]   # independent set -> weight (primal)
    clique: list[Fraction]                     # vertex weights (dual)
    sets: int


def fractional_chromatic_lp(G: Graph, vertex_cap: int = LP_VERTEX_CAP, mis_cap: int = MIS_CAP) -> FractionalResult:
    """Solve the covering LP over maximal independent sets and check both certificates."""
    if G.n > vertex_cap:
        raise CapExceeded(f"fractional LP capped at {vertex_cap} vertices")
    if G.n == 0:
        return FractionalResult(Fraction(0), {}, [], 0)
    sets = maximal_independent_sets(G, mis_cap)
    sol = solve_covering(sets, G.n)
    cover = [Fraction(0)] * G.n
    for S, w in zip(sets, sol.x):
        if w < 0:
            raise AssertionError("negative primal weight")
        for v in S:
            cover[v] += w
    if any(c < 1 for c in cover):
        raise AssertionError("primal solution does not cover every vertex")
    y = sol.y
    if any(v < 0 for v in y) or any(sum(y[v] for v in S) > 1 for S in sets):
        raise AssertionError("dual solution is not a fractional clique")
    if sum(y) != sol.value:
        raise AssertionError("primal and dual objective values differ")
    weights = {S: w for S, w in zip(sets, sol.x) if w}
    return FractionalResult(sol.value, weights, list(y), len(sets))


def fractional_chromatic(G: Graph, vertex_cap: int = LP_VERTEX_CAP, mis_cap: int = MIS_CAP) -> Fraction:
    return fractional_chromatic_lp(G, vertex_cap, mis_cap).value


def fractional_lower_bound_from_odd_girth(G: Graph) -> Fraction:
    g = odd_girth(G)
    if g is None:
        raise ValueError(f"{G.name} is bipartite")
    return Fraction(g, (g - 1) // 2)


# -- k-fold colorings ------------------------------------------------------------

@dataclass(frozen=True)
class KFoldColoring:
    k: int
    n: int
    sets: tuple[tuple[int, ...], ...]   # sets[v] is a k-subset of 1..n

    def is_valid(self, G: Graph) -> bool:
        return (len(self.sets) == G.n
                and all(len(set(S)) == self.k and all(1 <= c <= self.n for c in S) for S in self.sets)
                and all(not set(self.sets[u]) & set(self.sets[v]) for u, v in G.edges))


@dataclass
class MultichromaticResult:
    value: int
    coloring: KFoldColoring
    refuted: list[int] = field(default_factory=list)
    nodes: int = 0


def multichromatic_number(G: Graph, k: int, budget: int = DEFAULT_BUDGET, fractional=None) -> MultichromaticResult:
    """Least n with G -> KG(n, k), scanning n upward.

    The scan starts at 2k, or at max(2k, ceil(k * fractional)) when a value of
    the fractional chromatic number is supplied. ``refuted`` lists the n that
    were exhaustively ruled out. Raises BudgetExhausted with the last refuted n
    in ``lower``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        c = optimal_coloring(G, budget)
        return MultichromaticResult(c.k, KFoldColoring(1, c.k, tuple((x,) for x in c.colors)))
    start = 2 * k
    if fractional is not None:
        start = max(start, math.ceil(k * Fraction(fractional)))
    refuted = []
    nodes = 0
    n = start
    while True:
        res = search_homomorphism(G, kneser_graph(n, k), budget)
        nodes += res.nodes
        if res.found:
            K = res.map.target
            kc = KFoldColoring(k, n, tuple(K.labels[x] for x in res.map.images))
            assert kc.is_valid(G)
            return MultichromaticResult(n, kc, refuted, nodes)
        if res.exhausted:
            raise BudgetExhausted(f"G -> KG({n},{k}) undecided", lower=refuted[-1] + 1 if refuted else start,
                                  nodes=nodes)
        refuted.append(n)
        n += 1


# -- closed forms ----------------------------------------------------------------

def lower_bound_multichrom(s: int, t: int, r: int) -> int:
    if min(s, t, r) < 1:
        raise ValueError("parameters must be positive")
    return t + 2 * (r - 1)


def kneser_chromatic(n: int, k: int) -> int:
    if k < 1 or n < 2 * k:
        raise ValueError("needs n >= 2k >= 2")
    return n - 2 * k + 2


# -- homomorphism order around W(s, t+1) -------------------------------------

@dataclass
class Relation:
    claim: str
    kind: str                  # "iso" or "hom"
    status: str                # "confirmed", "refuted", "unconfirmed"
    how: str = ""
    strict: bool = False
    reverse: str | None = None  # for strict claims: "refuted", "unconfirmed", or "found"


def _iso(claim, G, H, budget):
    r = is_isomorphic_small(G, H, budget)
    status = {Status.FOUND: "confirmed", Status.NONE: "refuted", Status.EXHAUSTED: "unconfirmed"}[r.status]
    return Relation(claim, "iso", status, "isomorphism search")


def _hom(claim, F, G, budget, explicit: VertexMap | None = None, strict=False):
    if explicit is not None and explicit.verified:
        rel = Relation(claim, "hom", "confirmed", "explicit map, verified", strict)
    else:
        r = search_homomorphism(F, G, budget)
        status = {Status.FOUND: "confirmed", Status.NONE: "refuted", Status.EXHAUSTED: "unconfirmed"}[r.status]
        rel = Relation(claim, "hom", status, "search", strict)
    if strict:
        back = search_homomorphism(G, F, budget)
        rel.reverse = {Status.FOUND: "found", Status.NONE: "refuted", Status.EXHAUSTED: "unconfirmed"}[back.status]
    return rel


def sandwich_report(s: int, t: int, budget: int = 1_000_000) -> list[Relation]:
    """Certify the position of W(s, t+1) between M_{3s-2}(W(s, t)) and M_s(W(s, t)).

    Handles s = 1 (everything is K_{t+1}) and t = 2 (the cycle case). Each
    claim is confirmed by an explicit map or search; strict claims also try to
    refute the reverse map. Budget exhaustion is reported as "unconfirmed".
    """
    W_t, W_next = build_W(s, t), build_W(s, t + 1)
    low, high = mycielskian(W_t, 3 * s - 2), mycielskian(W_t, s)
    out = []
    if s == 1:
        K = complete_graph(t + 1)
        out.append(_iso(f"M_1(W(1,{t})) ≅ K_{t + 1}", low, K, budget))
        out.append(_iso(f"W(1,{t + 1}) ≅ K_{t + 1}", W_next, K, budget))
        return out
    if t == 2:
        C_low, C_high = cycle_graph(6 * s - 3), cycle_graph(2 * s + 1)
        out.append(_iso(f"M_{3 * s - 2}(W({s},2)) ≅ C_{6 * s - 3}", low, C_low, budget))
        out.append(_iso(f"W({s},3) ≅ C_{6 * s - 3}", W_next, C_low, budget))
        out.append(_iso(f"M_{s}(W({s},2)) ≅ C_{2 * s + 1}", high, C_high, budget))
        out.append(_hom(f"W({s},3) ≺ M_{s}(W({s},2))", W_next, high, budget,
                        explicit=hom_W_to_mycielskian(s, 2), strict=True))
        return out
    out.append(_hom(f"M_{3 * s - 2}(W({s},{t})) ≺ W({s},{t + 1})", low, W_next, budget, strict=True))
    out.append(_hom(f"W({s},{t + 1}) ≺ M_{s}(W({s},{t}))", W_next, high, budget,
                    explicit=hom_W_to_mycielskian(s, t), strict=True))
    return out


def relation_holds(rel: Relation) -> bool | None:
    """True/False when decided, None when some part is unconfirmed."""
    if rel.status == "unconfirmed" or (rel.strict and rel.reverse == "unconfirmed"):
        return None
    ok = rel.status == "confirmed"
    if rel.strict:
        ok = ok and rel.reverse == "refuted"
    return ok

