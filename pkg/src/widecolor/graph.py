"""Immutable simple graphs, the standard families, and walk machinery."""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np
from scipy import sparse

from .errors import BudgetExhausted, CapExceeded


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``. ``labels`` is an
    optional tuple of distinct hashable labels, one per vertex. ``transitive``
    is set only by constructors that know the graph is vertex-transitive; it is
    never inferred. ``family`` records the constructor and its parameters, e.g.
    ``("W", 2, 3)``, so maps and certificates can name their endpoints.

    Instances are treated as immutable; none of the methods modify them.
    """

    __slots__ = ("n", "edges", "labels", "name", "transitive",
                 "family", "_nbrs", "_index", "_csr", "_dense")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[Hashable] | None = None,
                 name: str = "", transitive: bool = False, family: tuple | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise ValueError("vertex labels must be pairwise distinct")
        self.n = n
        self.edges = frozenset(norm)
        self.labels = labels
        self.name = name
        self.transitive = transitive
        self.family = family
        self._nbrs = None
        self._index = None
        self._csr = None
        self._dense = None

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def _neighbor_sets(self):
        if self._nbrs is None:
            nb = [set() for _ in range(self.n)]
            for u, v in self.edges:
                nb[u].add(v)
                nb[v].add(u)
            self._nbrs = tuple(frozenset(s) for s in nb)
        return self._nbrs

    def neighbors(self, v: int) -> frozenset[int]:
        return self._neighbor_sets()[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets()[u]

    def degree(self, v: int) -> int:
        return len(self._neighbor_sets()[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._neighbor_sets()]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def index_of(self, label) -> int:
        if self.labels is None:
            raise KeyError("graph has no labels")
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def csr(self) -> sparse.csr_matrix:
        """Symmetric 0/1 adjacency matrix (int32) in CSR form."""
        if self._csr is None:
            if self.edges:
                e = np.array(self.sorted_edges(), dtype=np.int64)
                rows = np.concatenate([e[:, 0], e[:, 1]])
                cols = np.concatenate([e[:, 1], e[:, 0]])
            else:
                rows = cols = np.zeros(0, dtype=np.int64)
            data = np.ones(len(rows), dtype=np.int32)
            self._csr = sparse.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))
        return self._csr

    def adjacency_matrix(self) -> np.ndarray:
        if self._dense is None:
            a = np.zeros((self.n, self.n), dtype=bool)
            for u, v in self.edges:
                a[u, v] = a[v, u] = True
            a.setflags(write=False)
            self._dense = a
        return self._dense

    # -- derived graphs ------------------------------------------------

    def delete_edge(self, u: int, v: int) -> Graph:
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise KeyError(f"no edge {e}")
        return Graph(self.n, self.edges - {e}, self.labels, f"{self.name}-e{e}")

    def delete_vertex(self, v: int) -> Graph:
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep, name=f"{self.name}-v{v}")

    def induced_subgraph(self, vertices: Sequence[int], name: str = "") -> Graph:
        pos = {u: i for i, u in enumerate(vertices)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        labels = None if self.labels is None else [self.labels[u] for u in vertices]
        return Graph(len(vertices), edges, labels, name or f"{self.name}[sub]")

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.name or '?'}: n={self.n}, m={self.m})"


# -- families ---------------------------------------------------------

@lru_cache(maxsize=None)
def complete_graph(t: int) -> Graph:
    if t < 1:
        raise ValueError("complete_graph needs t >= 1")
    return Graph(t, combinations(range(t), 2), name=f"K_{t}", transitive=True, family=("complete", t))


@lru_cache(maxsize=None)
def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)), name=f"C_{n}", transitive=True, family=("cycle", n))


@lru_cache(maxsize=None)
def kneser_graph(n: int, k: int) -> Graph:
    """KG(n, k): k-subsets of {1..n} (sorted tuples), adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"kneser_graph needs n >= 2k >= 2, got n={n}, k={k}")
    verts = list(combinations(range(1, n + 1), k))
    index = {v: i for i, v in enumerate(verts)}
    ground = set(range(1, n + 1))
    edges = []
    for i, v in enumerate(verts):
        rest = sorted(ground.difference(v))
        for w in combinations(rest, k):
            j = index[w]
            if i < j:
                edges.append((i, j))
    return Graph(len(verts), edges, verts, name=f"KG({n},{k})", transitive=True, family=("KG", n, k))


# -- walks ------------------------------------------------------------

@dataclass(frozen=True)
class WalkRelation:
    """``related(u, v)`` iff some walk with exactly ``length`` edges joins u and v."""

    length: int
    matrix: np.ndarray  # (n, n) bool, symmetric

    def related(self, u: int, v: int) -> bool:
        return bool(self.matrix[u, v])

    def pairs(self):
        us, vs = np.nonzero(np.triu(self.matrix))
        return list(zip(us.tolist(), vs.tolist()))

    def extend(self, G: Graph) -> WalkRelation:
        return WalkRelation(self.length + 1, _compose(self.matrix, G.adjacency_matrix()))


def _compose(rel: np.ndarray, adj: np.ndarray) -> np.ndarray:
    prod = rel.astype(np.int32) @ adj.astype(np.int32)
    return prod > 0


def walk_relation(G: Graph, L: int) -> WalkRelation:
    """Relation of exact-length-L walks by repeated composition with adjacency."""
    if L < 0:
        raise ValueError("walk length must be non-negative")
    rel = np.eye(G.n, dtype=bool)
    adj = G.adjacency_matrix()
    for _ in range(L):
        rel = _compose(rel, adj)
    return WalkRelation(L, rel)


def walk_reach(G: Graph, start, L: int) -> np.ndarray:
    """Boolean vector of vertices reachable from the set ``start`` by a walk of exactly L edges.

    ``start`` is a boolean vector or an iterable of vertex indices.
    """
    A = G.csr()
    cur = np.zeros(G.n, dtype=np.int32)
    if isinstance(start, np.ndarray) and start.dtype == bool:
        cur[start] = 1
    else:
        cur[list(start)] = 1
    for _ in range(L):
        cur = (A @ cur > 0).astype(np.int32)
    return cur.astype(bool)


def odd_girth(G: Graph) -> int | None:
    """Length of the shortest odd cycle, or None for bipartite graphs.

    For each vertex v the sets W_L of endpoints of length-L walks from v are
    grown until v shows up in an odd layer or both parity classes stop growing.
    The shortest odd closed walk is always a cycle.
    """
    A = G.csr()
    best = None
    for v in range(G.n):
        if G.degree(v) == 0:
            continue
        prev2 = None
        prev = np.zeros(G.n, dtype=np.int32)
        prev[v] = 1
        L = 0
        while best is None or L + 1 < best:
            L += 1
            cur = (A @ prev > 0).astype(np.int32)
            if L % 2 == 1 and cur[v]:
                best = L
                break
            if prev2 is not None and np.array_equal(cur, prev2):
                break
            prev2, prev = prev, cur
        if best == 3:
            break
    return best


def is_bipartite(G: Graph) -> bool:
    return odd_girth(G) is None


def max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


def bfs_distances(G: Graph, source: int) -> list[int]:
    dist = [-1] * G.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in G.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


# -- small-graph isomorphism --------------------------------------------

class Status(enum.Enum):
    FOUND = "found"
    NONE = "none"
    EXHAUSTED = "budget-exhausted"


@dataclass
class IsoResult:
    status: Status
    mapping: list[int] | None = None
    nodes: int = 0

    def __bool__(self):
        return self.status is Status.FOUND


ISO_VERTEX_CAP = 64


def is_isomorphic_small(G: Graph, H: Graph, budget: int = 1_000_000, cap: int = ISO_VERTEX_CAP) -> IsoResult:
    """Decide G ≅ H by backtracking over distance-preserving partial bijections.

    On success ``mapping[u]`` is the image of u in H and has been checked to be an
    edge-preserving bijection. Running out of ``budget`` search nodes gives
    ``Status.EXHAUSTED``; it is never reported as a "no".
    """
    if max(G.n, H.n) > cap:
        raise CapExceeded(f"isomorphism search capped at {cap} vertices")
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return IsoResult(Status.NONE)
    n = G.n
    if n == 0:
        return IsoResult(Status.FOUND, [])
    dG = [bfs_distances(G, v) for v in range(n)]
    dH = [bfs_distances(H, v) for v in range(n)]

    def profile(g, d, v):
        return g.degree(v), tuple(sorted(Counter(d[v]).items()))

    pG = [profile(G, dG, v) for v in range(n)]
    pH = [profile(H, dH, v) for v in range(n)]
    if Counter(pG) != Counter(pH):
        return IsoResult(Status.NONE)
    by_profile: dict = {}
    for w in range(n):
        by_profile.setdefault(pH[w], []).append(w)

    # rarest profile first, then BFS so each vertex meets already-placed ones
    rarity = Counter(pG)
    order, seen = [], set()
    for root in sorted(range(n), key=lambda v: (rarity[pG[v]], v)):
        if root in seen:
            continue
        seen.add(root)
        q = deque([root])
        while q:
            u = q.popleft()
            order.append(u)
            for w in sorted(G.neighbors(u)):
                if w not in seen:
                    seen.add(w)
                    q.append(w)

    image = [-1] * n
    used = [False] * n
    nodes = 0

    def extend(i):
        nonlocal nodes
        if i == n:
            return True
        u = order[i]
        placed = order[:i]
        for c in by_profile[pG[u]]:
            if used[c]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted("isomorphism budget exhausted", nodes=nodes)
            if all(dH[c][image[w]] == dG[u][w] for w in placed):
                image[u] = c
                used[c] = True
                if extend(i + 1):
                    return True
                used[c] = False
                image[u] = -1
        return False

    try:
        found = extend(0)
    except BudgetExhausted:
        return IsoResult(Status.EXHAUSTED, nodes=nodes)
    if not found:
        return IsoResult(Status.NONE, nodes=nodes)
    mapped = {(min(image[a], image[b]), max(image[a], image[b])) for a, b in G.edges}
    if len(set(image)) != n or mapped != set(H.edges):
        raise AssertionError("isomorphism witness failed re-verification")
    return IsoResult(Status.FOUND, image, nodes)
