"""Generalized Mycielskians and the constructions relating them to W(s, t).

M_h(G) has vertices (v, j) for 0 <= j < h plus an apex z. Base edges are
copied on level 0, every base edge uv also joins (u, j) to (v, j+1) and
(v, j) to (u, j+1), and z is joined to the whole top level h-1.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import NamedTuple

from .errors import CapExceeded, ConstructionError
from .graph import Graph, complete_graph
from .homomorphism import verified_map
from .universal import Coloring, build_W, is_s_wide, is_wide_vertex


class MycielskiVertex(NamedTuple):
    base: object  # label (or index) of the base vertex
    level: int


class Apex:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "z"

    def __reduce__(self):
        return (Apex, ())


APEX = Apex()

MYCIELSKI_VERTEX_CAP = 200_000
# denominators beyond this are rounded down in the growth table
GROWTH_MAX_DEN = 10 ** 60


def mycielskian(G: Graph, h: int) -> Graph:
    """M_h(G). Vertex (v, j) has index j*n + v; the apex is last."""
    if h < 1:
        raise ValueError("mycielskian needs h >= 1")
    n = G.n
    if h * n + 1 > MYCIELSKI_VERTEX_CAP:
        raise CapExceeded(f"M_{h}({G.name}) would have {h * n + 1} vertices")
    edges = []
    for u, v in G.sorted_edges():
        edges.append((u, v))
        for j in range(h - 1):
            edges.append((j * n + u, (j + 1) * n + v))
            edges.append((j * n + v, (j + 1) * n + u))
    z = h * n
    edges.extend(((h - 1) * n + v, z) for v in range(n))
    labels = [MycielskiVertex(G.label(v), j) for j in range(h) for v in range(n)] + [APEX]
    return Graph(h * n + 1, edges, labels, name=f"M_{h}({G.name})",
                 family=("mycielski", G.family, h) if G.family else None)


def mycielski_index(G: Graph, v: int, level: int) -> int:
    return level * G.n + v


def apex_index(G: Graph, h: int) -> int:
    return h * G.n


def iterated_mycielskian(G: Graph, h: int, d: int) -> Graph:
    if d < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(d):
        G = mycielskian(G, h)
    return G


def groetzsch_graph() -> Graph:
    return iterated_mycielskian(complete_graph(2), 2, 2)


# -- the wide coloring of M_{3s-2}(G) ---------------------------------------

def wide_coloring_of_mycielskian(G: Graph, c0, s: int):
    """Extend an s-wide t-coloring of G to an s-wide (t+1)-coloring of M_{3s-2}(G).

    The new color t+1 goes on the apex and on levels s, s+2, ..., 3s-4; every
    other (v, j) keeps c0(v). The result is re-checked before it is returned.
    """
    if s < 2:
        raise ValueError("the construction needs s >= 2")
    if not is_s_wide(G, c0, s):
        raise ValueError(f"base coloring is not {s}-wide")
    h = 3 * s - 2
    gamma = c0.k + 1
    levels = set(range(s, 3 * s - 3, 2))
    colors = [gamma if j in levels else c0.colors[v] for j in range(h) for v in range(G.n)]
    colors.append(gamma)
    c = Coloring(tuple(colors), gamma)
    M = mycielskian(G, h)
    chk = is_s_wide(M, c, s)
    if not chk:
        raise ConstructionError(f"extended coloring is not {s}-wide: {chk.witness}")
    return M, c


# -- W(s, t+1) -> M_s(W(s, t)) -----------------------------------------------

def hom_W_to_mycielskian(s: int, t: int, replacement=None, seed: int | None = None):
    """The explicit homomorphism W(s, t+1) -> M_s(W(s, t)).

    Vertices whose only 1 is the last coordinate go to ((0, 1, ..., 1), s-1)
    unless ``replacement`` (a W(s, t) vertex) or ``seed`` (pick one at random)
    says otherwise.
    """
    src = build_W(s, t + 1)
    base = build_W(s, t)
    M = mycielskian(base, s)
    if replacement is None and seed is not None:
        replacement = random.Random(seed).choice(base.labels)
    if replacement is None:
        replacement = (0,) + (1,) * (t - 1)
    park = mycielski_index(base, base.index_of(tuple(replacement)), s - 1)
    z = apex_index(base, s)
    images = []
    for x in src.labels:
        head, last = x[:t], x[t]
        if last == 0:
            images.append(z)
        elif is_wide_vertex(head, s):
            images.append(mycielski_index(base, base.index_of(head), s - last))
        elif [i for i, a in enumerate(x) if a == 1] == [t]:
            images.append(park)
        else:
            raise ConstructionError(f"no rule covers {x}")
    return verified_map(src, M, images, seed=seed)


# -- fractional chromatic number of Mycielskians ---------------------------------

def tardif_fractional_step(q, h: int) -> Fraction:
    """q + 1 / sum_{i<h} (q-1)^i, the fractional chromatic number of M_h(G) when that of G is q."""
    q = Fraction(q)
    if q <= 1:
        raise ValueError("needs q > 1")
    if h < 1:
        raise ValueError("needs h >= 1")
    return q + 1 / sum((q - 1) ** i for i in range(h))


def fractional_growth_lower_bounds(s: int, t_max: int, max_den: int | None = GROWTH_MAX_DEN) -> dict[int, Fraction]:
    """Lower bounds on the fractional chromatic number of W(s, t), t = 3..t_max.

    Starts from W(s, 3) ≅ C_{6s-3} and applies the step with h = 3s-2, since
    M_{3s-2}(W(s, t)) maps into W(s, t+1) and the step is increasing in q.

    The exact recurrence roughly quadruples the number of denominator digits
    per step, so once a denominator passes ``max_den`` the value is rounded
    down to a multiple of 1/max_den. Rounding down keeps every entry a valid
    lower bound (monotonicity again); ``max_den=None`` keeps everything exact.
    """
    if s < 2:
        raise ValueError("needs s >= 2")
    out = {}
    q = Fraction(6 * s - 3, 3 * s - 2)
    for t in range(3, t_max + 1):
        out[t] = q
        nxt = tardif_fractional_step(q, 3 * s - 2)
        if max_den is not None and nxt.denominator > max_den:
            nxt = Fraction(math.floor(nxt * max_den), max_den)
            if nxt <= q:
                raise ArithmeticError("rounding ate the whole increment; raise max_den")
        q = nxt
    return out
