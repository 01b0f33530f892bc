"""The universal graphs W(s, t) for s-wide colorings and their set-chain form.

A vertex of W(s, t) is a sequence ``x`` in {0..s}^t with exactly one zero and
at least one 1; ``x ~ y`` when every coordinate has ``|x_i - y_i| = 1`` or
``x_i = y_i = s``.

The chain form Omega(s, t) has vertices ``(A_0, ..., A_{s-1})`` of subsets of
{1..t} (stored as sorted tuples) with ``|A_0| = 1``, ``A_1`` nonempty,
``A_i ⊆ A_{i+2}`` and ``A_{s-2} ∩ A_{s-1} = ∅``; two chains are adjacent when
``A_i ⊆ B_{i+1}`` and ``B_i ⊆ A_{i+1}`` for ``i < s-1`` and the last sets are
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from .errors import CapExceeded, ConstructionError
from .graph import Graph, walk_reach

W_VERTEX_CAP = 20000
MAX_T = 24

WideVertex = tuple  # tuple[int, ...]
OmegaVertex = tuple  # tuple[tuple[int, ...], ...]


def vertex_count_formula(s: int, t: int) -> int:
    if s < 1 or t < 2:
        raise ValueError("need s >= 1 and t >= 2")
    return t * (s ** (t - 1) - (s - 1) ** (t - 1))


def odd_girth_formula(s: int, t: int) -> int:
    if s < 1 or t < 3:
        raise ValueError("odd girth formula needs s >= 1 and t >= 3")
    return 2 * s - 1 + 2 * (-(-(2 * s - 1) // (t - 2)))


def _check_params(s, t, min_s=1):
    if s < min_s or t < 2:
        raise ValueError(f"need s >= {min_s} and t >= 2, got s={s}, t={t}")
    if t > MAX_T:
        raise CapExceeded(f"t={t} is beyond the supported envelope t <= {MAX_T}")


# -- sequence form ------------------------------------------------------

def is_wide_vertex(x: Sequence[int], s: int) -> bool:
    return (all(0 <= a <= s for a in x)
            and sum(1 for a in x if a == 0) == 1
            and any(a == 1 for a in x))


def wide_adjacent(x: Sequence[int], y: Sequence[int], s: int) -> bool:
    return all(abs(a - b) == 1 or a == b == s for a, b in zip(x, y))


def iter_wide_vertices(s: int, t: int):
    """All vertices of W(s, t) in lexicographic order."""
    for x in product(range(s + 1), repeat=t):
        if is_wide_vertex(x, s):
            yield x


def _coordinate_moves(a, s):
    if a == 0:
        return (1,)
    if a == s:
        return (s - 1, s)
    return (a - 1, a + 1)


def wide_neighbors(x: Sequence[int], s: int):
    """Neighbors of ``x`` in W(s, t), generated from the coordinate rule."""
    for y in product(*(_coordinate_moves(a, s) for a in x)):
        if is_wide_vertex(y, s):
            yield y


@lru_cache(maxsize=None)
def build_W(s: int, t: int) -> Graph:
    _check_params(s, t)
    count = vertex_count_formula(s, t)
    if count > W_VERTEX_CAP:
        raise CapExceeded(f"W({s},{t}) has {count} vertices (cap {W_VERTEX_CAP}); use the streamed path")
    verts = list(iter_wide_vertices(s, t))
    index = {x: i for i, x in enumerate(verts)}
    edges = []
    for i, x in enumerate(verts):
        for y in wide_neighbors(x, s):
            j = index[y]
            if i < j:
                edges.append((i, j))
    return Graph(len(verts), edges, verts, name=f"W({s},{t})", family=("W", s, t))


# -- chain form -------------------------------------------------------

def _mask(elems) -> int:
    m = 0
    for j in elems:
        m |= 1 << (j - 1)
    return m


def _elems(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def _supersets_within(low: int, high: int):
    """All masks S with low ⊆ S ⊆ high (empty iterator if low ⊄ high)."""
    if low & ~high:
        return
    free = high & ~low
    sub = free
    while True:
        yield low | sub
        if sub == 0:
            break
        sub = (sub - 1) & free


def is_omega_chain(masks: Sequence[int], s: int) -> bool:
    """The defining conditions of an Omega(s, t) vertex, on bitmasks."""
    ell = s - 1
    if len(masks) != s or bin(masks[0]).count("1") != 1 or masks[1] == 0:
        return False
    if any(masks[i] & ~masks[i + 2] for i in range(ell - 1)):
        return False
    return masks[ell - 1] & masks[ell] == 0


def omega_adjacent_masks(A: Sequence[int], B: Sequence[int], s: int) -> bool:
    ell = s - 1
    for i in range(ell):
        if A[i] & ~B[i + 1] or B[i] & ~A[i + 1]:
            return False
    return A[ell] & B[ell] == 0


def omega_masks(U: OmegaVertex) -> tuple[int, ...]:
    return tuple(_mask(a) for a in U)


def omega_from_masks(masks: Sequence[int]) -> OmegaVertex:
    return tuple(_elems(m) for m in masks)


def _iter_omega_masks(s, t):
    full = (1 << t) - 1
    chain = [0] * s

    # consecutive sets are disjoint in every valid chain, which keeps this small
    def rec(i):
        if i == s:
            if is_omega_chain(chain, s):
                yield tuple(chain)
            return
        if i == 0:
            choices = (1 << j for j in range(t))
        elif i == 1:
            choices = (m for m in _supersets_within(0, full & ~chain[0]) if m)
        else:
            choices = _supersets_within(chain[i - 2], full & ~chain[i - 1])
        for m in choices:
            chain[i] = m
            yield from rec(i + 1)

    yield from rec(0)


def omega_to_sequence(U: OmegaVertex, s: int, t: int) -> WideVertex:
    """Inverse of :func:`iso_g`: x_j is the first index whose set holds j, else s."""
    x = [s] * t
    for i in reversed(range(s)):
        for j in U[i]:
            x[j - 1] = i
    return tuple(x)


@lru_cache(maxsize=None)
def build_Omega(s: int, t: int) -> Graph:
    if s < 2:
        raise ValueError("build_Omega needs s >= 2; the s = 1 case is W(1, t) = K_t, use build_W")
    _check_params(s, t, min_s=2)
    count = vertex_count_formula(s, t)
    if count > W_VERTEX_CAP:
        raise CapExceeded(f"Omega({s},{t}) has {count} vertices (cap {W_VERTEX_CAP})")
    ell = s - 1
    full = (1 << t) - 1
    chains = list(_iter_omega_masks(s, t))
    labels = [omega_from_masks(c) for c in chains]
    # same index order as build_W, so iso_g is the identity on indices
    order = sorted(range(len(chains)), key=lambda i: omega_to_sequence(labels[i], s, t))
    chains = [chains[i] for i in order]
    labels = [labels[i] for i in order]
    index = {c: i for i, c in enumerate(chains)}
    edges = []
    for i, A in enumerate(chains):
        # B_0 ⊆ A_1 singleton; A_{j-1} ⊆ B_j ⊆ A_{j+1}; A_{ell-1} ⊆ B_ell ⊆ complement of A_ell
        ranges = [[1 << j for j in range(t) if A[1] >> j & 1]]
        for j in range(1, ell):
            ranges.append(list(_supersets_within(A[j - 1], A[j + 1])))
        ranges.append(list(_supersets_within(A[ell - 1], full & ~A[ell])))
        for B in product(*ranges):
            j = index.get(B)
            if j is not None and i < j and omega_adjacent_masks(A, B, s):
                edges.append((i, j))
    return Graph(len(chains), edges, labels, name=f"Omega({s},{t})", family=("Omega", s, t))


def iso_g(x: WideVertex, s: int) -> OmegaVertex:
    """A_i = {j : x_j <= i and x_j ≡ i (mod 2)} for i = 0..s-1."""
    U = tuple(tuple(j + 1 for j, a in enumerate(x) if a <= i and (a - i) % 2 == 0)
              for i in range(s))
    if s >= 2:
        masks = omega_masks(U)
        if not is_omega_chain(masks, s):
            raise ConstructionError(f"iso_g({x}) = {U} is not an Omega chain")
        if any(masks[i - 1] & masks[i] for i in range(1, s)):
            raise ConstructionError(f"iso_g({x}) = {U} has intersecting consecutive sets")
    return U


# -- colorings ----------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` is the color of vertex v, drawn from 1..k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colors {bad[:3]} outside 1..{self.k}")

    def is_proper(self, G: Graph) -> bool:
        return len(self.colors) == G.n and all(self.colors[u] != self.colors[v] for u, v in G.edges)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


def canonical_coloring(G: Graph) -> Coloring:
    """Color each W(s, t) vertex by the (1-based) position of its zero."""
    if G.labels is None or not all(isinstance(x, tuple) and x and all(isinstance(a, int) for a in x)
                                   and x.count(0) == 1 for x in G.labels):
        raise ValueError(f"{G!r} does not carry W(s, t) sequence labels")
    t = len(G.labels[0])
    return Coloring(tuple(x.index(0) + 1 for x in G.labels), t)


@dataclass
class WideCheck:
    ok: bool
    witness: tuple[int, int, int] | None = None  # (u, v, color) joined by a bad walk
    length: int | None = None

    def __bool__(self):
        return self.ok


def is_s_wide(G: Graph, c: Coloring, s: int, strict: bool = False) -> WideCheck:
    """Check that no walk of length 2s-1 joins two vertices of the same color.

    With ``strict`` every odd length 1, 3, ..., 2s-1 is checked. The answer is
    the same (a walk grows by 2 by bouncing on its last edge); it is kept as a
    cross-check.
    """
    if len(c.colors) != G.n:
        raise ValueError("coloring is not total on G")
    if s < 1:
        raise ValueError("s must be positive")
    L = 2 * s - 1
    lengths = range(1, L + 1, 2) if strict else (L,)
    colors = np.array(c.colors)
    A = G.csr()
    for col in sorted(set(c.colors)):
        cls = colors == col
        cur = cls.astype(np.int32)
        for step in range(1, L + 1):
            cur = (A @ cur > 0).astype(np.int32)
            if step in lengths and np.any(cur.astype(bool) & cls):
                return WideCheck(False, _locate(G, cls, col, step), step)
    return WideCheck(True)


def _locate(G, cls, col, L):
    for u in np.flatnonzero(cls).tolist():
        hit = walk_reach(G, [u], L) & cls
        if hit.any():
            return u, int(np.flatnonzero(hit)[0]), col
    raise AssertionError("class-level violation without a vertex-level witness")


# -- the cycle from the odd girth discussion ---------------------------------

def embedded_odd_cycle(s: int, t: int) -> list[WideVertex]:
    """Rotations of (0, 1, ..., s, s, s-1, ..., 1), padded with s's, in cycle order."""
    if t < 2 * s + 1:
        raise ValueError(f"embedded cycle needs t >= 2s+1 = {2 * s + 1}")
    base = list(range(s + 1)) + list(range(s, 0, -1))
    k = len(base)
    cyc = [tuple(base[(i + r) % k] for i in range(k)) + (s,) * (t - k) for r in range(k)]
    if len(set(cyc)) != k or not all(is_wide_vertex(x, s) for x in cyc):
        raise ConstructionError("embedded cycle vertices are not distinct W vertices")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not wide_adjacent(a, b, s):
            raise ConstructionError(f"{a} and {b} are not adjacent in W({s},{t})")
    return cyc
