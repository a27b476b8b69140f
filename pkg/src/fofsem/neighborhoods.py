"""Extended-neighborhood construction under competing semantics.

Three notions of the "friends of friends" of a focal vertex:

* shortest-exactly-k: vertices whose shortest-path distance is exactly k
  ("strictly 2" for k=2).
* path-exactly-k: vertices reachable by an edge-non-repeating walk of
  length exactly k ("2 and 1" for k=2, which may include direct friends).
* path-count (k=2 only): number of length-2 walks leaving the focal
  vertex that do not return to it; count-valued, after the non-unique
  friends-of-friends convention.

All operations are pure functions of an immutable Graph.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph

_EMPTY = np.empty(0, dtype=np.int64)


class SemanticsKind(Enum):
    SHORTEST_K = "strictly_k"
    PATH_K = "path_k"
    PATH_COUNT = "path_count"

    @property
    def set_valued(self) -> bool:
        return self is not SemanticsKind.PATH_COUNT


class UnsupportedKError(ValueError):
    pass


@dataclass(frozen=True)
class NeighborSet:
    """Result of one semantics applied to one focal vertex.

    ``members`` is a sorted, duplicate-free int array; empty for the
    count-valued semantics, where only ``count`` is meaningful.
    """

    focal: int
    k: int
    kind: SemanticsKind
    members: np.ndarray
    count: int

    def __eq__(self, other):
        if not isinstance(other, NeighborSet):
            return NotImplemented
        return (
            self.focal == other.focal
            and self.k == other.k
            and self.kind == other.kind
            and self.count == other.count
            and np.array_equal(self.members, other.members)
        )


def _set_result(focal, k, kind, members) -> NeighborSet:
    members = np.asarray(members, dtype=np.int64)
    return NeighborSet(focal, k, kind, members, len(members))


def neighbors_shortest_k(g: Graph, v: int, k: int) -> NeighborSet:
    """Vertices at BFS distance exactly k from v.

    k=0 returns {v} itself; for k>=1 the focal vertex never appears.
    """
    if k == 0:
        return _set_result(v, 0, SemanticsKind.SHORTEST_K, [v])
    if k == 1:
        return _set_result(v, 1, SemanticsKind.SHORTEST_K, g.neighbors(v).astype(np.int64))
    dist = np.full(g.vertex_count, -1, dtype=np.int64)
    dist[v] = 0
    frontier = deque([v])
    found: list[int] = []
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        if du >= k:
            break
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = du + 1
                if du + 1 == k:
                    found.append(int(w))
                else:
                    frontier.append(int(w))
    found.sort()
    return _set_result(v, k, SemanticsKind.SHORTEST_K, found)


def path2_members(g: Graph, v: int) -> np.ndarray:
    """Sorted union of the neighbors' adjacency lists, excluding v.

    The k=2 fast path: a linear merge of sorted runs. This is the kernel
    that has to scale to the multi-million-vertex road networks.
    """
    nbrs = g.neighbors(v)
    if nbrs.size == 0:
        return _EMPTY
    parts = [g.indices[g.indptr[u]:g.indptr[u + 1]] for u in nbrs]
    merged = np.unique(np.concatenate(parts)) if len(parts) > 1 else np.unique(parts[0])
    return merged[merged != v].astype(np.int64)


def members_k2(g: Graph, v: int, kind: SemanticsKind) -> np.ndarray:
    """Sorted member array of v's k=2 set under a set-valued semantics."""
    if kind is SemanticsKind.PATH_K:
        return path2_members(g, v)
    if kind is SemanticsKind.SHORTEST_K:
        return np.setdiff1d(path2_members(g, v), g.neighbors(v), assume_unique=True)
    raise ValueError("members_k2 requires a set-valued semantics")


def neighbors_path_k(g: Graph, v: int, k: int) -> NeighborSet:
    """Vertices w != v reachable by an edge-non-repeating walk of length k.

    Supported for k in {1, 2, 3}. For k=2 in a simple graph this is
    exactly the union of the neighbors' neighbor sets minus v.
    """
    if k == 1:
        return _set_result(v, 1, SemanticsKind.PATH_K, g.neighbors(v).astype(np.int64))
    if k == 2:
        return _set_result(v, 2, SemanticsKind.PATH_K, path2_members(g, v))
    if k == 3:
        found: set[int] = set()
        for a in g.neighbors(v):
            for b in g.neighbors(a):
                if b == v:
                    continue  # would reuse edge (v, a)
                for c in g.neighbors(b):
                    if c == a:
                        continue  # would reuse edge (a, b)
                    if c != v:
                        found.add(int(c))
        return _set_result(v, 3, SemanticsKind.PATH_K, sorted(found))
    raise UnsupportedKError(f"path-exactly-k supports k in {{1,2,3}}, got {k}")


def path_count_k(g: Graph, v: int, k: int = 2) -> int:
    """Number of length-2 walks from v that do not return to v.

    Equals sum over neighbors u of (degree(u) - 1); multiplicities count.
    """
    if k != 2:
        raise UnsupportedKError(f"path-count supports only k=2, got {k}")
    nbrs = g.neighbors(v)
    if nbrs.size == 0:
        return 0
    degs = g.indptr[nbrs + 1] - g.indptr[nbrs]
    return int((degs - 1).sum())


def neighborhood(g: Graph, v: int, k: int, kind: SemanticsKind) -> NeighborSet:
    """Dispatch on semantics kind; count-valued results carry empty members."""
    if kind is SemanticsKind.SHORTEST_K:
        return neighbors_shortest_k(g, v, k)
    if kind is SemanticsKind.PATH_K:
        return neighbors_path_k(g, v, k)
    return NeighborSet(v, k, SemanticsKind.PATH_COUNT, _EMPTY, path_count_k(g, v, k))


def oracle_neighbors(g: Graph, v: int, k: int, kind: SemanticsKind) -> NeighborSet:
    """Brute-force reference by exhaustive walk enumeration.

    Enumerates every edge-non-repeating walk from v up to length k
    (simple-path minimum for the shortest-distance kind). Exponential;
    intended for graphs of at most a dozen vertices, in tests only.
    """
    if kind is SemanticsKind.SHORTEST_K:
        if k == 0:
            return _set_result(v, 0, kind, [v])
        best: dict[int, int] = {v: 0}

        def walk_simple(u: int, depth: int, visited: set[int]) -> None:
            for w in g.neighbors(u):
                w = int(w)
                if w in visited:
                    continue
                if w not in best or depth + 1 < best[w]:
                    best[w] = depth + 1
                walk_simple(w, depth + 1, visited | {w})

        walk_simple(v, 0, {v})
        return _set_result(v, k, kind, sorted(w for w, d in best.items() if d == k and w != v))

    endpoints: list[int] = []

    def walk_trails(u: int, depth: int, used: set[frozenset]) -> None:
        if depth == k:
            if u != v:
                endpoints.append(u)
            return
        for w in g.neighbors(u):
            w = int(w)
            e = frozenset((u, w))
            if e in used:
                continue
            walk_trails(w, depth + 1, used | {e})

    walk_trails(v, 0, set())
    if kind is SemanticsKind.PATH_COUNT:
        # only terminal returns to v are filtered, per the k=2 definition
        return NeighborSet(v, k, kind, _EMPTY, len(endpoints))
    return _set_result(v, k, kind, sorted(set(endpoints)))
