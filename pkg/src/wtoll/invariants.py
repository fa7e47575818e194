"""The weakly toll interval number wtn(G) and hull number wth(G).

Both solvers are case analyses over structure computed elsewhere: wtn
searches a bounded window around the twin classes of extreme vertices,
wth branches on the clique separator decomposition. Each result carries a
witness set and the case tag naming the branch that fired, and every
witness is re-verified (I(witness) = V resp. H(witness) = V) before it is
returned. Exact brute-force counterparts for small graphs live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .atoms import decompose
from .errors import CapExceededError, DisconnectedGraphError, InternalConsistencyError
from .graph import Graph, bits, is_clique, is_complete, is_connected, mask_of
from .intervals import _interval_mask, hull, is_extreme_vertex
from .twins import TwinPartition, extreme_twin_classes, twin_classes

__all__ = ["InvariantResult", "wtn", "wth", "brute_force_wtn", "brute_force_wth"]


@dataclass(frozen=True)
class InvariantResult:
    """A computed invariant with its certifying set and solver branch."""

    value: int
    witness: frozenset[int]
    case_tag: str


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError("invariant is defined for connected graphs only")


def _covers_by_interval(g: Graph, smask: int) -> bool:
    return _interval_mask(g, smask) == g._full


def _covers_by_hull(g: Graph, smask: int) -> bool:
    full = g._full
    cur = smask
    while True:
        nxt = _interval_mask(g, cur)
        if nxt == full:
            return True
        if nxt == cur:
            return False
        cur = nxt


# ---------------------------------------------------------------------------
# interval number
# ---------------------------------------------------------------------------

def wtn(g: Graph, prune_twins: bool = True) -> InvariantResult:
    """Minimum size of a set S with I(S) = V, with witness and case tag.

    Complete graphs force S = V. Otherwise, with k the number of twin
    classes consisting of extreme vertices (k <= 2), the union of those
    classes is forced into S and the search only has to try bounded
    complements: total candidate size up to 8 for k = 0, up to 5 extras
    for k = 1, up to 2 extras for k = 2. Candidates are explored in
    increasing size and lexicographic order, so the result is
    deterministic.

    With ``prune_twins`` (default) extras carry at most one vertex per
    twin class, and every candidate R is completed to
    R + (V - I(R-with-base)): because I(S) = S + I(S-hat), each interval
    set shrinks onto such a completion, so scanning representatives plus
    completions still finds the exact minimum while skipping the bulk of
    the subset space. The unpruned search tries all bounded extras
    literally; agreement of the two modes is part of the test suite.
    """
    _require_connected(g)
    n = g.n
    everything = frozenset(range(n))
    if is_complete(g):
        return InvariantResult(n, everything, "COMPLETE")

    part = twin_classes(g)
    extreme_cls = extreme_twin_classes(g, part)
    k = len(extreme_cls)
    base: frozenset[int] = frozenset().union(
        *(part.classes[i] for i in extreme_cls)
    ) if extreme_cls else frozenset()
    base_mask = mask_of(base)
    lo, hi = {0: (2, 8), 1: (1, 5), 2: (0, 2)}[k]
    tag = f"WTN_K{k}"
    extra_pool = sorted(set(range(n)) - base)

    if not prune_twins:
        for size in range(lo, hi + 1):
            for extra in combinations(extra_pool, size):
                smask = base_mask | mask_of(extra)
                if _covers_by_interval(g, smask):
                    return InvariantResult(len(base) + size, base | frozenset(extra), tag)
        raise InternalConsistencyError(
            f"no weakly toll interval set found in the k={k} search window"
        )

    best: tuple[int, int] | None = None  # (value, witness mask)
    for size in range(lo, hi + 1):
        floor = len(base) + size
        if best is not None and floor >= best[0]:
            break
        for extra in combinations(extra_pool, size):
            if _twin_duplicate(extra, part):
                continue
            rmask = base_mask | mask_of(extra)
            smask = rmask | (g._full & ~_interval_mask(g, rmask))
            value = smask.bit_count()
            if best is None or value < best[0]:
                best = (value, smask)
                if value == floor:
                    break  # nothing at this size can beat an empty completion
    if best is None:
        raise InternalConsistencyError(
            f"no weakly toll interval set found in the k={k} search window"
        )
    return InvariantResult(best[0], frozenset(bits(best[1])), tag)


def _twin_duplicate(extra: tuple[int, ...], part: TwinPartition) -> bool:
    seen: set[int] = set()
    for v in extra:
        idx = part.class_of[v]
        if idx in seen:
            return True
        seen.add(idx)
    return False


# ---------------------------------------------------------------------------
# hull number
# ---------------------------------------------------------------------------

def wth(g: Graph) -> InvariantResult:
    """Minimum size of a set S with H(S) = V, with witness and case tag.

    Branches, in order: complete graph; prime graph (any nonadjacent pair
    works); at least three extremal atoms; an extremal atom whose
    exclusive set is not a clique; and finally exactly two extremal atoms
    with clique exclusive sets, where the answer depends on which of two
    canonically chosen exclusive vertices are extreme. Every witness is
    verified by computing its hull before returning.
    """
    _require_connected(g)
    n = g.n
    if is_complete(g):
        return _verified(g, InvariantResult(n, frozenset(range(n)), "COMPLETE"))

    dec = decompose(g)
    if len(dec.atoms) == 1:
        pair = _least_nonadjacent_pair(g)
        return _verified(g, InvariantResult(2, frozenset(pair), "PRIME_PAIR"))

    extremal = [i for i, flag in enumerate(dec.extremal) if flag]
    if len(extremal) < 2:
        raise InternalConsistencyError(
            "reducible graph produced fewer than two extremal atoms"
        )

    if len(extremal) >= 3:
        i, j = extremal[0], extremal[1]
        witness = frozenset({min(dec.exclusive[i]), min(dec.exclusive[j])})
        return _verified(g, InvariantResult(2, witness, "THREE_EXTREMAL"))

    for i in extremal:
        if not is_clique(g, dec.exclusive[i]):
            pair = _nonclique_exclusive_pair(g, dec.exclusive[i], dec.shared[i])
            return _verified(
                g, InvariantResult(2, frozenset(pair), "EXCLUSIVE_NOT_CLIQUE")
            )

    i, j = extremal
    u1 = _two_extremal_choice(g, dec.atoms[i], dec.exclusive[i], dec.shared[i])
    u2 = _two_extremal_choice(g, dec.atoms[j], dec.exclusive[j], dec.shared[j])
    x1, x2 = len(dec.exclusive[i]), len(dec.exclusive[j])
    e1, e2 = is_extreme_vertex(g, u1), is_extreme_vertex(g, u2)
    if e1 and e2:
        result = InvariantResult(
            x1 + x2, dec.exclusive[i] | dec.exclusive[j], "TWO_EXTREMAL_BOTH_EXTREME"
        )
    elif e1:
        result = InvariantResult(
            x1 + 1, dec.exclusive[i] | {u2}, "TWO_EXTREMAL_ONE_EXTREME"
        )
    elif e2:
        result = InvariantResult(
            x2 + 1, dec.exclusive[j] | {u1}, "TWO_EXTREMAL_ONE_EXTREME"
        )
    else:
        result = InvariantResult(2, frozenset({u1, u2}), "TWO_EXTREMAL_NONE_EXTREME")
    return _verified(g, result)


def _verified(g: Graph, result: InvariantResult) -> InvariantResult:
    if hull(g, result.witness) != frozenset(range(g.n)):
        raise InternalConsistencyError(
            f"{result.case_tag} witness {sorted(result.witness)} is not a hull set"
        )
    return result


def _least_nonadjacent_pair(g: Graph) -> tuple[int, int]:
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if not g.has_edge(u, w):
                return u, w
    raise InternalConsistencyError("no nonadjacent pair in a non-complete graph")


def _nonclique_exclusive_pair(
    g: Graph, exclusive: frozenset[int], shared: frozenset[int]
) -> tuple[int, int]:
    # candidates per the separator structure: exclusive vertices with a
    # neighbor in the atom's shared clique; a nonadjacent pair among them
    # always exists when the exclusive set is not a clique
    anchored = sorted(v for v in exclusive if g.neighbors(v) & shared)
    for a, u in enumerate(anchored):
        for w in anchored[a + 1:]:
            if not g.has_edge(u, w):
                return u, w
    raise InternalConsistencyError(
        "non-clique exclusive set yielded no anchored nonadjacent pair"
    )


def _two_extremal_choice(
    g: Graph, atom: frozenset[int], exclusive: frozenset[int], shared: frozenset[int]
) -> int:
    if is_clique(g, atom):
        return min(exclusive)
    for v in sorted(exclusive):
        if any(not g.has_edge(v, s) for s in shared):
            return v
    raise InternalConsistencyError(
        "non-complete extremal atom has no exclusive vertex missing a shared neighbor"
    )


# ---------------------------------------------------------------------------
# brute force (testing oracles)
# ---------------------------------------------------------------------------

def _brute_force(g: Graph, covers, cap: int, tag: str) -> InvariantResult:
    _require_connected(g)
    if g.n > cap:
        raise CapExceededError(f"brute force refused: n={g.n} exceeds cap {cap}")
    for size in range(1, g.n + 1):
        for s in combinations(range(g.n), size):
            if covers(g, mask_of(s)):
                return InvariantResult(size, frozenset(s), tag)
    raise InternalConsistencyError("V(G) itself failed to cover the graph")


def brute_force_wtn(g: Graph, cap: int = 10) -> InvariantResult:
    """Exact wtn by subset enumeration in increasing cardinality."""
    return _brute_force(g, _covers_by_interval, cap, "BRUTE_FORCE")


def brute_force_wth(g: Graph, cap: int = 10) -> InvariantResult:
    """Exact wth by subset enumeration in increasing cardinality."""
    return _brute_force(g, _covers_by_hull, cap, "BRUTE_FORCE")
