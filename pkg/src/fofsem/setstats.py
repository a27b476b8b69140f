"""Jaccard-distance statistics between neighborhood semantics.

Per-vertex distances are aggregated over *all* vertices of a graph;
vertices where both sets are empty contribute 0 (identical sets) and are
counted separately so the alternative convention stays recomputable.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .neighborhoods import NeighborSet, SemanticsKind, members_k2, neighborhood

# n at or below which the whole-graph routine uses dense boolean
# membership matrices (one float32 matmul); above it, per-vertex sorted
# merges. 500-vertex sweep graphs always take the dense route.
_DENSE_LIMIT = 1024


@dataclass(frozen=True)
class JaccardSummary:
    """Graph-level aggregate of per-vertex Jaccard distances."""

    mean: float
    max: float
    n_both_empty: int
    per_node: np.ndarray | None = None


def jaccard_distance(a: NeighborSet, b: NeighborSet) -> float:
    """1 - |A n B| / |A u B|; both sets empty counts as distance 0."""
    if not a.kind.set_valued or not b.kind.set_valued:
        raise ValueError("jaccard_distance requires set-valued semantics")
    if a.focal != b.focal:
        raise ValueError("neighbor sets have different focal vertices")
    return _jaccard_members(a.members, b.members)


def _jaccard_members(ma: np.ndarray, mb: np.ndarray) -> float:
    if len(ma) == 0 and len(mb) == 0:
        return 0.0
    inter = np.intersect1d(ma, mb, assume_unique=True).size
    union = len(ma) + len(mb) - inter
    return 1.0 - inter / union


def _dense_membership(g: Graph, kind: SemanticsKind, k: int) -> np.ndarray:
    """Boolean membership matrix: row v marks the semantics set of v."""
    n = g.vertex_count
    adj = np.zeros((n, n), dtype=bool)
    rows = np.repeat(np.arange(n), np.diff(g.indptr))
    adj[rows, g.indices] = True
    if k == 1:
        return adj
    two = (adj.astype(np.float32) @ adj.astype(np.float32)) > 0
    np.fill_diagonal(two, False)
    if kind is SemanticsKind.PATH_K:
        return two
    return two & ~adj  # distance exactly 2: 2-reachable, not adjacent, not self


def _jaccard_dense(g: Graph, kind_a, kind_b, k):
    ma = _dense_membership(g, kind_a, k)
    mb = _dense_membership(g, kind_b, k)
    inter = (ma & mb).sum(axis=1)
    union = (ma | mb).sum(axis=1)
    per_node = np.zeros(g.vertex_count, dtype=np.float64)
    nonempty = union > 0
    per_node[nonempty] = 1.0 - inter[nonempty] / union[nonempty]
    return per_node, int((~nonempty).sum())


def _jaccard_sparse_k2(g: Graph, kind_a, kind_b):
    n = g.vertex_count
    per_node = np.zeros(n, dtype=np.float64)
    both_empty = 0
    for v in range(n):
        ma = members_k2(g, v, kind_a)
        mb = ma if kind_b is kind_a else members_k2(g, v, kind_b)
        if len(ma) == 0 and len(mb) == 0:
            both_empty += 1
            continue
        per_node[v] = _jaccard_members(ma, mb)
    return per_node, both_empty


def jaccard_graph(
    g: Graph,
    kind_a: SemanticsKind,
    kind_b: SemanticsKind,
    k: int = 2,
    keep_per_node: bool = False,
) -> JaccardSummary:
    """Per-vertex Jaccard distance between two semantics over a whole graph.

    The mean is the arithmetic mean over all vertices (both-empty
    vertices contribute 0); the max is the per-vertex maximum. Results
    are deterministic and independent of any parallel scheduling.
    """
    if not kind_a.set_valued or not kind_b.set_valued:
        raise ValueError("jaccard_graph requires set-valued semantics")
    n = g.vertex_count
    if n == 0:
        return JaccardSummary(0.0, 0.0, 0, np.empty(0) if keep_per_node else None)
    if k == 2 and n <= _DENSE_LIMIT:
        per_node, both_empty = _jaccard_dense(g, kind_a, kind_b, k)
    elif k == 2:
        per_node, both_empty = _jaccard_sparse_k2(g, kind_a, kind_b)
    else:
        per_node = np.zeros(n, dtype=np.float64)
        both_empty = 0
        for v in range(n):
            a = neighborhood(g, v, k, kind_a)
            b = neighborhood(g, v, k, kind_b)
            if a.count == 0 and b.count == 0:
                both_empty += 1
                continue
            per_node[v] = _jaccard_members(a.members, b.members)
    mean = float(per_node.sum() / n)
    return JaccardSummary(
        mean=mean,
        max=float(per_node.max()),
        n_both_empty=both_empty,
        per_node=per_node if keep_per_node else None,
    )
