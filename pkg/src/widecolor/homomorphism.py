"""Vertex maps, homomorphism verification, and the explicit maps between the W graphs.

The central object is the map f from Omega(s, t) to KG(t + 2(s-1), s) showing
that the s-fold chromatic number of W(s, t) is t + 2(s-1). Free choices in its
rules go through a *choice policy*: ``"smallest"`` takes the least admissible
elements, ``"random"`` draws them from a seeded RNG.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ConstructionError
from .graph import Graph, kneser_graph
from .universal import (
    build_Omega,
    Coloring,
    build_W,
    canonical_coloring,
    is_s_wide,
    iso_g,
    iter_wide_vertices,
    omega_masks,
    vertex_count_formula,
    wide_neighbors,
)

UNVERIFIED = "unverified"
VERIFIED = "verified-hom"
REFUTED = "refuted"

POLICIES = ("smallest", "random")


@dataclass(eq=False)
class VertexMap:
    """A total map ``source -> target`` given by ``images[v]``.

    ``certificate`` is managed by :func:`verify_homomorphism`; ``witness`` holds
    a source edge whose image is not an edge when the map is refuted.
    """

    source: Graph
    target: Graph
    images: tuple[int, ...]
    policy: str | None = None
    seed: int | None = None
    certificate: str = UNVERIFIED
    witness: tuple[int, int] | None = None
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        self.images = tuple(int(x) for x in self.images)
        if len(self.images) != self.source.n:
            raise ValueError(f"map has {len(self.images)} images for {self.source.n} source vertices")
        if any(not 0 <= x < self.target.n for x in self.images):
            raise ValueError("image index outside the target vertex range")

    @property
    def verified(self) -> bool:
        return self.certificate == VERIFIED

    def __call__(self, v: int) -> int:
        return self.images[v]

    def image_label(self, v: int):
        return self.target.label(self.images[v])


@dataclass
class HomCheck:
    ok: bool
    edge: tuple[int, int] | None = None
    edges_checked: int = 0

    def __bool__(self):
        return self.ok


def verify_homomorphism(F: Graph, G: Graph, m: VertexMap | Sequence[int]) -> HomCheck:
    """Check every edge of F lands on an edge of G (loops included as failures)."""
    images = m.images if isinstance(m, VertexMap) else tuple(m)
    if len(images) != F.n or any(not 0 <= x < G.n for x in images):
        raise ValueError("map is not total from F into V(G)")
    checked = 0
    bad = None
    for u, v in F.sorted_edges():
        checked += 1
        if not G.has_edge(images[u], images[v]):
            bad = (u, v)
            break
    result = HomCheck(bad is None, bad, checked)
    if isinstance(m, VertexMap):
        if m.source is not F and m.source != F or m.target is not G and m.target != G:
            raise ValueError("map endpoints do not match the graphs given")
        m.certificate = VERIFIED if result.ok else REFUTED
        m.witness = bad
        m.counts = {"vertices": F.n, "edges": F.m if result.ok else checked}
    return result


def verified_map(source: Graph, target: Graph, images, policy=None, seed=None) -> VertexMap:
    """Build a map and verify it; a failure here is a bug in a construction."""
    m = VertexMap(source, target, images, policy, seed)
    chk = verify_homomorphism(source, target, m)
    if not chk:
        u, v = chk.edge
        raise ConstructionError(
            f"{source.name} -> {target.name}: edge {source.label(u)} ~ {source.label(v)} "
            f"maps to non-edge {m.image_label(u)}, {m.image_label(v)}")
    return m


def identity_map(G: Graph) -> VertexMap:
    return verified_map(G, G, range(G.n))


def compose(m1: VertexMap, m2: VertexMap) -> VertexMap:
    """``m2 ∘ m1`` (first m1, then m2); both must already be verified."""
    if not (m1.verified and m2.verified):
        raise ValueError("compose needs verified maps")
    if m1.target is not m2.source and m1.target != m2.source:
        raise ValueError(f"endpoint mismatch: {m1.target.name} vs {m2.source.name}")
    images = [m2.images[x] for x in m1.images]
    return verified_map(m1.source, m2.target, images,
                        policy=m2.policy or m1.policy, seed=m2.seed if m2.seed is not None else m1.seed)


# -- restriction W(s, t) -> W(r, t) --------------------------------------

def phi(a: int, r: int) -> int:
    return a if a <= r else r


def restriction_hom_phi(s: int, r: int, t: int) -> VertexMap:
    if not 1 <= r <= s:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    src, dst = build_W(s, t), build_W(r, t)
    images = [dst.index_of(tuple(phi(a, r) for a in x)) for x in src.labels]
    return verified_map(src, dst, images)


def iso_g_map(s: int, t: int) -> VertexMap:
    """iso_g as a map W(s, t) -> Omega(s, t); for s = 1 the identity on W(1, t)."""
    W = build_W(s, t)
    if s == 1:
        return identity_map(W)
    Om = build_Omega(s, t)
    return verified_map(W, Om, [Om.index_of(iso_g(x, s)) for x in W.labels])


# -- the map into the Kneser graph -----------------------------------------

def _popcount(m):
    return bin(m).count("1")


def _low(m):
    return (m & -m).bit_length()


def _holds(m, j):
    return bool(m >> (j - 1) & 1)


def _elements(m):
    out, j = [], 1
    while m:
        if m & 1:
            out.append(j)
        m >>= 1
        j += 1
    return out


def make_chooser(policy: str = "smallest", seed: int | None = None) -> Callable[[int, int], list[int]]:
    """Return ``pick(mask, count)`` giving ``count`` distinct elements of the set ``mask``."""
    if policy == "smallest":
        def pick(mask, count):
            elems = _elements(mask)
            if len(elems) < count:
                raise ConstructionError(f"need {count} elements from {elems}")
            return elems[:count]
    elif policy == "random":
        rng = random.Random(seed)

        def pick(mask, count):
            elems = _elements(mask)
            if len(elems) < count:
                raise ConstructionError(f"need {count} elements from {elems}")
            return rng.sample(elems, count)
    else:
        raise ValueError(f"unknown choice policy {policy!r}; expected one of {POLICIES}")
    return pick


def _pair(A, i, s, t, lo, pick):
    """Values for positions i-1 and i from the triple (A_{i-2}, A_{i-1}, A_i).

    ``lo`` is the first of the two "lower" labels (t+i-1 for odd s, t+i for even s);
    the "upper" labels are always t+s+i-2 and t+s+i-1.
    """
    a, b, c = _popcount(A[i - 2]), _popcount(A[i - 1]), _popcount(A[i])
    hi = t + s + i - 2
    if a > b and b > c:
        raise ConstructionError(f"|A_{i-2}| > |A_{i-1}| > |A_{i}| contradicts A_{i-2} ⊆ A_{i}")
    if a > b:
        return lo, lo + 1
    if b > c:
        return hi, hi + 1
    fresh = A[i] & ~A[i - 2]
    lower = lo if _holds(A[i - 2], _low(A[i - 2] | A[i - 1])) else lo + 1
    upper = hi if _holds(A[i - 1], _low(A[i - 1] | A[i])) else hi + 1
    if a < b < c:
        x, y = pick(fresh, 2)
        return x, y
    if a < b == c:
        return pick(fresh, 1)[0], upper
    if a == b < c:
        return lower, pick(fresh, 1)[0]
    return lower, upper  # a == b == c, so A_i = A_{i-2}


def theorem_f_image(U_masks: Sequence[int], s: int, t: int, pick) -> tuple[int, ...]:
    """The s-subset of {1..t+2(s-1)} assigned to the chain given by ``U_masks``.

    Returned as a sorted tuple; raises ConstructionError if a rule falls
    through or the values are not s distinct elements.
    """
    A = U_masks
    z = [0] * s
    if s == 1:
        z[0] = _low(A[0])
    elif s % 2 == 1:
        for i in range(2, s, 2):
            z[i - 1], z[i] = _pair(A, i, s, t, t + i - 1, pick)
        z[0] = _low(A[0])
    else:
        for i in range(3, s, 2):
            z[i - 1], z[i] = _pair(A, i, s, t, t + i, pick)
        n0, n1 = _popcount(A[0]), _popcount(A[1])
        if n0 > n1:
            raise ConstructionError("|A_0| > |A_1| cannot occur in Omega")
        if n0 == n1:
            z[0] = t + 1 if _low(A[0] | A[1]) == _low(A[0]) else t + 2
            z[1] = _low(A[1])
        else:
            z[0], z[1] = pick(A[1], 2)
    out = tuple(sorted(z))
    if len(set(out)) != s or not all(1 <= v <= t + 2 * (s - 1) for v in out):
        raise ConstructionError(f"chain {[_elements(m) for m in A]} gets invalid image {z}")
    return out


def theorem_hom_f(s: int, t: int, policy: str = "smallest", seed: int | None = None) -> VertexMap:
    """The verified homomorphism Omega(s, t) -> KG(t + 2(s-1), s) (W(1, t) -> KG(t, 1) for s = 1)."""
    if s < 1 or t < 2:
        raise ValueError("need s >= 1 and t >= 2")
    pick = make_chooser(policy, seed)
    target = kneser_graph(t + 2 * (s - 1), s)
    if s == 1:
        source = build_W(1, t)
        chains = [(1 << x.index(0),) for x in source.labels]
    else:
        source = build_Omega(s, t)
        chains = [omega_masks(U) for U in source.labels]
    images = [target.index_of(theorem_f_image(U, s, t, pick)) for U in chains]
    return verified_map(source, target, images, policy, seed)


def corollary_hom(s: int, r: int, t: int, policy: str = "smallest", seed: int | None = None) -> VertexMap:
    """W(s, t) -> W(r, t) -> Omega(r, t) -> KG(t + 2(r-1), r)."""
    return compose(restriction_hom_phi(s, r, t), compose(iso_g_map(r, t), theorem_hom_f(r, t, policy, seed)))


@dataclass
class StreamCertificate:
    ok: bool
    s: int
    t: int
    vertices: int
    edges: int
    policy: str
    seed: int | None
    images: list[tuple[int, ...]]
    witness: tuple | None = None


def verify_theorem_hom_streamed(s: int, t: int, policy: str = "smallest", seed: int | None = None) -> StreamCertificate:
    """Check f∘iso_g on W(s, t) without building either graph.

    Vertices are walked in lexicographic order (the index order of build_W and
    build_Omega, so random choices match :func:`theorem_hom_f`), and each
    vertex's neighbors are generated from the coordinate rule.
    """
    pick = make_chooser(policy, seed)
    verts = list(iter_wide_vertices(s, t))
    if s == 1:
        images = [(x.index(0) + 1,) for x in verts]
    else:
        images = [theorem_f_image(omega_masks(iso_g(x, s)), s, t, pick) for x in verts]
    as_mask = {}
    for x, img in zip(verts, images):
        mm = 0
        for e in img:
            mm |= 1 << e
        as_mask[x] = mm
    edges = 0
    for x in verts:
        mx = as_mask[x]
        for y in wide_neighbors(x, s):
            if x < y:
                edges += 1
                if mx & as_mask[y]:
                    return StreamCertificate(False, s, t, len(verts), edges, policy, seed, images, (x, y))
    if len(verts) != vertex_count_formula(s, t):
        raise ConstructionError("streamed vertex count disagrees with the closed form")
    return StreamCertificate(True, s, t, len(verts), edges, policy, seed, images)


# -- colorings from maps into W --------------------------------------------

def pullback_coloring(m: VertexMap):
    """Color v by the canonical color of m(v); target must be some W(s, t)."""
    if not m.verified:
        raise ValueError("pullback_coloring needs a verified map")
    fam = m.target.family
    if not fam or fam[0] != "W":
        raise ValueError("target of the map must be built by build_W")
    s = fam[1]
    canon = canonical_coloring(m.target)
    c = Coloring(tuple(canon.colors[x] for x in m.images), canon.k)
    chk = is_s_wide(m.source, c, s)
    if not chk:
        raise ConstructionError(f"pulled-back coloring is not {s}-wide: {chk.witness}")
    return c
