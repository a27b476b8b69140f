"""Immutable simple undirected graph with sorted CSR adjacency.

The adjacency is stored as two numpy arrays (indptr, indices), one sorted
neighbor run per vertex. Graphs are immutable after construction, so any
number of workers may read one concurrently.
"""
from __future__ import annotations

import gzip
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Iterable

import numpy as np


class EdgeListParseError(ValueError):
    """Raised on a malformed edge-list line; carries the 1-based line number."""

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: {reason}: {line!r}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency lists are strictly increasing.

    ``labels[i]`` is the original external label of dense vertex ``i``
    (identity when the graph was generated rather than loaded).
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: np.ndarray | None = None
    report: dict | None = field(default=None, compare=False, repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range [0, {self.vertex_count})")
        return int(self.indptr[v + 1] - self.indptr[v])

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self):
        return hash((self.vertex_count, len(self.indices)))

    def validate(self) -> None:
        """Check all structural invariants; raises AssertionError on breach."""
        n = self.vertex_count
        assert self.indptr[0] == 0 and self.indptr[-1] == len(self.indices)
        assert np.all(np.diff(self.indptr) >= 0)
        if len(self.indices):
            assert self.indices.min() >= 0 and self.indices.max() < n
        seen = set()
        for v in range(n):
            adj = self.neighbors(v)
            assert np.all(np.diff(adj) > 0), f"adjacency of {v} not strictly increasing"
            assert v not in adj, f"self-loop at {v}"
            for u in adj:
                seen.add((v, int(u)))
        for v, u in seen:
            assert (u, v) in seen, f"asymmetric edge {v}-{u}"
        assert len(self.indices) % 2 == 0


def from_edges(n: int, edges: np.ndarray, labels: np.ndarray | None = None,
               report: dict | None = None) -> Graph:
    """Build a Graph from an (m, 2) int array of dense-id endpoints.

    Self-loops and duplicate edges (either orientation) are collapsed;
    counts of dropped entries are merged into ``report``.
    """
    report = dict(report or {})
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    loops = edges[:, 0] == edges[:, 1]
    report["self_loops_dropped"] = int(loops.sum()) + report.get("self_loops_dropped", 0)
    edges = edges[~loops]
    if len(edges) == 0:
        indptr = np.zeros(n + 1, dtype=np.int64)
        return Graph(indptr, np.empty(0, dtype=np.int64), labels, report)
    both = np.concatenate([edges, edges[:, ::-1]])
    keys = both[:, 0] * n + both[:, 1]
    uniq = np.unique(keys)
    # duplicates counted per undirected edge: directed entries are 2x edges
    report["duplicate_edges_dropped"] = (
        (len(both) - len(uniq)) // 2 + report.get("duplicate_edges_dropped", 0)
    )
    src = uniq // n
    dst = uniq % n
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(indptr, dst.astype(np.int64), labels, report)


def _open_stream(source) -> io.BufferedIOBase:
    if isinstance(source, (str, Path)):
        path = Path(source)
        raw = path.open("rb")
        if path.suffix == ".gz":
            return gzip.open(raw)
        return raw
    if isinstance(source, bytes):
        return io.BytesIO(source)
    return source


def load_edge_list(source: str | Path | bytes | BinaryIO) -> Graph:
    """Parse a SNAP-style edge list into a simple undirected Graph.

    One whitespace-separated integer pair per line; lines starting with
    '#' are comments. Vertex labels are densely relabeled in order of
    first appearance; the mapping is kept in ``Graph.labels``. Repeated
    lines, reverse duplicates, and self-loops collapse to simple edges.
    Gzip input is detected by a ``.gz`` path suffix.
    """
    label_to_id: dict[int, int] = {}
    us: list[int] = []
    vs: list[int] = []
    stream = _open_stream(source)
    try:
        for lineno, raw in enumerate(stream, 1):
            line = raw.decode("utf-8", errors="replace") if isinstance(raw, bytes) else raw
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListParseError(lineno, line, "expected two fields")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(lineno, line, "non-integer token") from None
            if a < 0 or b < 0:
                raise EdgeListParseError(lineno, line, "negative vertex label")
            for lab in (a, b):
                if lab not in label_to_id:
                    label_to_id[lab] = len(label_to_id)
            us.append(label_to_id[a])
            vs.append(label_to_id[b])
    finally:
        if isinstance(source, (str, Path, bytes)):
            stream.close()
    n = len(label_to_id)
    labels = np.fromiter(label_to_id.keys(), dtype=np.int64, count=n)
    edges = np.column_stack([
        np.asarray(us, dtype=np.int64),
        np.asarray(vs, dtype=np.int64),
    ]) if us else np.empty((0, 2), dtype=np.int64)
    return from_edges(n, edges, labels=labels)


def write_edge_list(g: Graph, destination: str | Path | io.TextIOBase) -> None:
    """Write the graph in SNAP edge-list format, one undirected edge per line.

    A header comment records the vertex and edge counts. Dense ids are
    written; the original-label mapping is not applied.
    """
    own = isinstance(destination, (str, Path))
    out = open(destination, "w") if own else destination
    try:
        out.write(f"# vertices={g.vertex_count} edges={g.edge_count}\n")
        for u, v in g.edges():
            out.write(f"{u}\t{v}\n")
    finally:
        if own:
            out.close()
