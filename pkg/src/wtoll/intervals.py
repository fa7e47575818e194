"""Weakly toll walk membership, interval and hull operators, extreme vertices.

Membership of a vertex v in some weakly toll (u, w)-walk is decided by the
component criterion: v lies on such a walk iff there are neighbors
v_u of u and v_w of w such that v_u, v_w and v share a connected component
of the graph minus the blocked set (N[u] - v_u) union (N[w] - v_w).
Walk endpoints must be distinct and nonadjacent; adjacent pairs never
generate anything.

Everything here is pure. Per-pair walk masks are memoized on the Graph
instance, which makes repeated interval/hull evaluations over overlapping
pairs (subset searches, fixpoint iterations) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, component_mask

__all__ = [
    "MembershipWitness",
    "blocked_set",
    "in_weakly_toll_walk",
    "interval",
    "hull",
    "is_convex",
    "extreme_vertices",
    "is_extreme_vertex",
]


@dataclass(frozen=True)
class MembershipWitness:
    """Certificate that v lies on a weakly toll (u, w)-walk.

    ``v_u`` is the walk's second vertex (a neighbor of u), ``v_w`` its
    second-to-last (a neighbor of w), and ``component`` the component of
    the graph minus the blocked set containing v_u, v_w and v.
    """

    v_u: int
    v_w: int
    component: frozenset[int]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")


def _check_set(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        _check_vertex(g, v)
        m |= 1 << v
    return m


def blocked_set(g: Graph, u: int, w: int, v_u: int, v_w: int) -> frozenset[int]:
    """The set (N[u] - v_u) union (N[w] - v_w) removed when testing walks."""
    for x in (u, w, v_u, v_w):
        _check_vertex(g, x)
    if u == w:
        raise ValueError("walk endpoints must be distinct")
    if g.has_edge(u, w):
        raise ValueError("walk endpoints must be nonadjacent")
    if not g.has_edge(u, v_u):
        raise ValueError(f"{v_u} is not a neighbor of {u}")
    if not g.has_edge(w, v_w):
        raise ValueError(f"{v_w} is not a neighbor of {w}")
    mask = _blocked_mask(g, u, w, v_u, v_w)
    return frozenset(bits(mask))


def _blocked_mask(g: Graph, u: int, w: int, v_u: int, v_w: int) -> int:
    masks = g._masks
    closed_u = masks[u] | (1 << u)
    closed_w = masks[w] | (1 << w)
    return (closed_u & ~(1 << v_u)) | (closed_w & ~(1 << v_w))


def in_weakly_toll_walk(g: Graph, u: int, w: int, v: int) -> MembershipWitness | None:
    """First witness that v lies on a weakly toll (u, w)-walk, else None.

    Neighbor pairs (v_u, v_w) are scanned in ascending lexicographic order,
    so the returned witness is deterministic.
    """
    for x in (u, w, v):
        _check_vertex(g, x)
    if len({u, w, v}) != 3:
        raise ValueError("u, w, v must be pairwise distinct")
    if g.has_edge(u, w):
        raise ValueError("walk endpoints must be nonadjacent")
    masks = g._masks
    full = g._full
    for v_u in bits(masks[u]):
        for v_w in bits(masks[w]):
            blocked = _blocked_mask(g, u, w, v_u, v_w)
            if blocked >> v_u & 1 or blocked >> v_w & 1:
                continue
            comp = component_mask(masks, full & ~blocked, v_u)
            if comp >> v_w & 1 and comp >> v & 1:
                return MembershipWitness(v_u, v_w, frozenset(bits(comp)))
    return None


def _pair_walk_mask(g: Graph, u: int, w: int) -> int:
    """Mask of all vertices on some weakly toll (u, w)-walk (u, w excluded).

    Scans every (v_u, v_w) neighbor pair once and marks whole qualifying
    components; equivalent to the per-vertex membership test but with a
    single component sweep per pair. Memoized on the graph.
    """
    key = (u, w) if u < w else (w, u)
    cached = g._pair_cache.get(key)
    if cached is not None:
        return cached
    masks = g._masks
    full = g._full
    target = full & ~(1 << u) & ~(1 << w)
    marked = 0
    for v_u in bits(masks[u]):
        for v_w in bits(masks[w]):
            blocked = _blocked_mask(g, u, w, v_u, v_w)
            if blocked >> v_u & 1 or blocked >> v_w & 1:
                continue
            comp = component_mask(masks, full & ~blocked, v_u)
            if comp >> v_w & 1:
                marked |= comp
                if marked == target:
                    g._pair_cache[key] = marked
                    return marked
    g._pair_cache[key] = marked
    return marked


def _interval_mask(g: Graph, smask: int) -> int:
    marked = smask
    full = g._full
    verts = list(bits(smask))
    for i, u in enumerate(verts):
        if marked == full:
            break
        mu = g._masks[u]
        for w in verts[i + 1:]:
            if mu >> w & 1:
                continue
            marked |= _pair_walk_mask(g, u, w)
            if marked == full:
                break
    return marked


def interval(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """The weakly toll interval I(S): S plus every vertex on a weakly toll
    walk between two distinct nonadjacent vertices of S."""
    return frozenset(bits(_interval_mask(g, _check_set(g, s))))


def _hull_mask(g: Graph, smask: int) -> int:
    cur = smask
    while True:
        nxt = _interval_mask(g, cur)
        if nxt == cur:
            return cur
        cur = nxt


def hull(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """The weakly toll convex hull H(S): least fixed point of the interval
    operator containing S."""
    return frozenset(bits(_hull_mask(g, _check_set(g, s))))


def is_convex(g: Graph, s: Iterable[int]) -> bool:
    """True iff I(S) = S."""
    smask = _check_set(g, s)
    return _interval_mask(g, smask) == smask


def _simplicial_mask(g: Graph) -> int:
    # an extreme vertex must be simplicial: two nonadjacent neighbors a, b
    # would put it inside the walk a-x-b
    mask = 0
    for v in range(g.n):
        nb = g._masks[v]
        if all(nb & ~(1 << y) & ~g._masks[y] == 0 for y in bits(nb)):
            mask |= 1 << v
    return mask


def extreme_vertices(g: Graph) -> frozenset[int]:
    """Vertices x such that V - {x} is weakly toll convex.

    Equivalently: x lies on no weakly toll walk between two other
    (distinct, nonadjacent) vertices. Candidates are narrowed to the
    simplicial vertices first, then surviving ones are eliminated by
    scanning walk masks of nonadjacent pairs.
    """
    candidates = _simplicial_mask(g)
    for u in range(g.n):
        if not candidates:
            break
        mu = g._masks[u]
        for w in range(u + 1, g.n):
            if mu >> w & 1:
                continue
            candidates &= ~_pair_walk_mask(g, u, w)
            if not candidates:
                break
    return frozenset(bits(candidates))


def is_extreme_vertex(g: Graph, x: int) -> bool:
    """Membership test for :func:`extreme_vertices`, with early exit."""
    _check_vertex(g, x)
    nb = g._masks[x]
    if any(nb & ~(1 << y) & ~g._masks[y] for y in bits(nb)):
        return False  # not simplicial: interior of a neighbor-pair walk
    for u in range(g.n):
        if u == x:
            continue
        mu = g._masks[u]
        for w in range(u + 1, g.n):
            if w == x or mu >> w & 1:
                continue
            if _pair_walk_mask(g, u, w) >> x & 1:
                return False
    return True


def interval_members(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Interval computed with the per-vertex membership test.

    Same contract as :func:`interval`; exists so the component-sweep
    implementation can be cross-checked against the per-vertex one.
    """
    smask = _check_set(g, s)
    sset = set(bits(smask))
    out = set(sset)
    members = sorted(sset)
    for v in range(g.n):
        if v in sset:
            continue
        found = False
        for i, u in enumerate(members):
            for w in members[i + 1:]:
                if g.has_edge(u, w):
                    continue
                if in_weakly_toll_walk(g, u, w, v) is not None:
                    found = True
                    break
            if found:
                break
        if found:
            out.add(v)
    return frozenset(out)
