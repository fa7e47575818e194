"""True-twin classes and their interaction with extreme vertices."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .errors import InternalConsistencyError
from .graph import Graph, is_complete, is_connected
from .intervals import extreme_vertices

__all__ = ["TwinPartition", "twin_classes", "representatives", "extreme_twin_classes"]


@dataclass(frozen=True)
class TwinPartition:
    """Partition of V into maximal true-twin classes (equal closed
    neighborhoods), ordered by least member."""

    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]


def twin_classes(g: Graph) -> TwinPartition:
    """Group vertices on their closed-neighborhood bitmask.

    True twins have identical closed neighborhoods, so the mask is a
    perfect canonical key; no modular decomposition machinery is needed.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.neighbor_mask(v) | (1 << v), []).append(v)
    classes = tuple(
        frozenset(members) for members in sorted(groups.values(), key=lambda ms: ms[0])
    )
    class_of = [0] * g.n
    for idx, cls in enumerate(classes):
        for v in cls:
            class_of[v] = idx
    return TwinPartition(classes, tuple(class_of))


def representatives(p: TwinPartition, s: Iterable[int]) -> frozenset[int]:
    """One representative (the least member) of each twin class meeting S."""
    chosen: dict[int, int] = {}
    for v in s:
        idx = p.class_of[v]
        if idx not in chosen or v < chosen[idx]:
            chosen[idx] = v
    return frozenset(chosen.values())


def extreme_twin_classes(g: Graph, p: TwinPartition) -> list[int]:
    """Indices of twin classes whose members are all weakly toll extreme.

    At most two such classes can exist; finding more means the membership
    machinery is broken, so that is reported as an internal error rather
    than returned. Extremeness is checked for every member; a class with
    only some members extreme is not reported (and is surfaced as a
    warning, since the solvers assume class-uniform extremeness).
    """
    if not is_connected(g):
        raise ValueError("extreme twin classes are defined for connected graphs")
    if is_complete(g):
        raise ValueError("extreme twin classes are defined for non-complete graphs")
    ext = extreme_vertices(g)
    full = [i for i, cls in enumerate(p.classes) if cls <= ext]
    covered = frozenset().union(*(p.classes[i] for i in full)) if full else frozenset()
    if ext - covered:
        warnings.warn(
            f"extreme vertices {sorted(ext - covered)} sit in twin classes that "
            "are not uniformly extreme",
            RuntimeWarning,
            stacklevel=2,
        )
    if len(full) > 2:
        raise InternalConsistencyError(
            f"{len(full)} twin classes of extreme vertices found; at most 2 are possible"
        )
    return full
