"""Immutable simple undirected graphs over dense vertex ids 0..n-1.

Adjacency is kept both as frozensets (public) and as int bitmasks
(internal, bit i = vertex i), so neighborhood and component operations
reduce to word-parallel integer arithmetic. All functions here are pure;
a Graph never changes after construction and is safe to share.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator, Sequence

from .errors import GraphParseError

__all__ = [
    "Graph",
    "bits",
    "mask_of",
    "component_mask",
    "parse_edge_list",
    "to_edge_list",
    "parse_graph6",
    "to_graph6",
    "connected_components",
    "is_connected",
    "is_clique",
    "is_complete",
    "max_clique",
]


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_mask(masks: Sequence[int], allowed: int, start: int) -> int:
    """Mask of vertices reachable from ``start`` without leaving ``allowed``.

    ``start`` must itself be inside ``allowed``.
    """
    comp = 1 << start
    frontier = comp
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= masks[low.bit_length() - 1]
            f ^= low
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


class Graph:
    """Finite simple undirected graph with vertices 0..n-1."""

    __slots__ = ("n", "m", "_adj", "_masks", "_full", "_pair_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._masks: tuple[int, ...] = tuple(mask_of(a) for a in self._adj)
        self._full = (1 << n) - 1
        self.m = sum(len(a) for a in self._adj) // 2
        # lazily filled by wtoll.intervals; maps a nonadjacent pair (u, w)
        # with u < w to the mask of vertices on weakly toll (u, w)-walks
        self._pair_cache: dict[tuple[int, int], int] = {}

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def fingerprint(self) -> str:
        """Stable short hash of the adjacency structure."""
        payload = f"{self.n};" + ";".join(f"{u},{v}" for u, v in self.edges())
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line is ``n m``; every following line is an edge
    ``u v`` with ``0 <= u, v < n`` and ``u != v``. Lines starting with ``#``
    and blank lines are ignored. Parallel edges collapse silently;
    self-loops are a hard error.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno) from None
        if n is None:
            if a < 0 or b < 0:
                raise GraphParseError("header 'n m' must be nonnegative", lineno)
            n = a
            continue
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if n is None:
        raise GraphParseError("empty input: missing 'n m' header")
    return Graph(n, edges)


def to_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize to the edge-list format (re-parsing yields an equal graph)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 format (bit-packed upper triangle, standard encoding)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, data[8:]
    if len(data) < 4:
        raise GraphParseError("truncated graph6 size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, data[4:]


def _g6_encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def parse_graph6(line: str) -> Graph:
    """Decode one graph6-encoded graph (optional ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise GraphParseError("invalid graph6 character")
    n, body = _g6_decode_size(data)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}"
        )
    bitstream = 0
    for c in body:
        bitstream = (bitstream << 6) | (c - 63)
    total = 6 * len(body)
    if nbits < total and bitstream & ((1 << (total - nbits)) - 1):
        raise GraphParseError("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream >> (total - 1 - idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (inverse of :func:`parse_graph6`, bit-exact)."""
    n = g.n
    out = bytearray(_g6_encode_size(n))
    acc = 0
    nacc = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc, nacc = 0, 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# elementary queries
# ---------------------------------------------------------------------------

def _check_subset(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
        m |= 1 << v
    return m


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of the subgraph induced by V minus ``removed``.

    Returned sets partition V minus ``removed`` and are ordered by least
    member.
    """
    allowed = g._full & ~_check_subset(g, removed)
    comps = []
    rest = allowed
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_mask(g._masks, allowed, start)
        comps.append(frozenset(bits(comp)))
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    comp = component_mask(g._masks, g._full, 0)
    return comp == g._full


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices in ``s`` is adjacent."""
    smask = _check_subset(g, s)
    for v in bits(smask):
        if smask & ~(1 << v) & ~g._masks[v]:
            return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def max_clique(g: Graph) -> frozenset[int]:
    """Exact maximum clique via branch and bound with a greedy coloring bound.

    Deterministic: the root candidate order is descending degree with
    identifier tie-break, and coloring is greedy in candidate order.
    Exponential in the worst case; intended for moderate instances.
    """
    n = g.n
    if n == 0:
        return frozenset()
    masks = g._masks
    best: tuple[int, ...] = ()

    def color_sort(cand: list[int]) -> tuple[list[int], list[int]]:
        # ordered: vertices grouped by greedy color class; bound[i] = class no.
        class_masks: list[int] = []
        class_members: list[list[int]] = []
        for v in cand:
            for k, cm in enumerate(class_masks):
                if not cm & masks[v]:
                    class_masks[k] |= 1 << v
                    class_members[k].append(v)
                    break
            else:
                class_masks.append(1 << v)
                class_members.append([v])
        ordered: list[int] = []
        bound: list[int] = []
        for k, members in enumerate(class_members):
            ordered.extend(members)
            bound.extend([k + 1] * len(members))
        return ordered, bound

    def expand(r: list[int], cand: list[int]) -> None:
        nonlocal best
        ordered, bound = color_sort(cand)
        for i in range(len(ordered) - 1, -1, -1):
            if len(r) + bound[i] <= len(best):
                return
            v = ordered[i]
            r.append(v)
            sub = [u for u in ordered[:i] if masks[v] >> u & 1]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = tuple(r)
            r.pop()

    root = sorted(range(n), key=lambda v: (-g.degree(v), v))
    expand([], root)
    return frozenset(best)
