"""Seeded random-graph generators: Erdos-Renyi, Barabasi-Albert, Watts-Strogatz.

Every generator is a pure function of its parameters including the seed:
same spec, same graph, bit for bit. Parallel sweeps derive per-trial
seeds with fofsem.seeds.mix_seed instead of sharing an RNG.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, from_edges

_WS_MAX_REDRAWS = 100


class InvalidSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one synthetic graph family.

    p is the ER edge probability or the WS rewiring probability; power is
    the BA preferential-attachment exponent; nei is the WS per-side
    lattice neighborhood; m is the BA edge count per new vertex.
    """

    family: str  # "er" | "ba" | "ws"
    n: int
    p: float = 0.0
    power: float = 1.0
    nei: int = 1
    m: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.family not in ("er", "ba", "ws"):
            raise InvalidSpecError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise InvalidSpecError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidSpecError(f"p must be in [0,1], got {self.p}")
        if self.power < 0:
            raise InvalidSpecError(f"power must be >= 0, got {self.power}")
        if self.m < 1:
            raise InvalidSpecError(f"m must be >= 1, got {self.m}")
        if self.nei < 1:
            raise InvalidSpecError(f"nei must be >= 1, got {self.nei}")
        if self.family == "ws" and self.nei > (self.n - 1) // 2:
            raise InvalidSpecError(
                f"ws lattice needs nei <= (n-1)/2, got nei={self.nei}, n={self.n}"
            )
        if self.family == "ba" and self.n < 2:
            raise InvalidSpecError("ba needs n >= 2")


def generate(spec: GeneratorSpec) -> Graph:
    spec.validate()
    if spec.family == "er":
        return generate_er(spec.n, spec.p, spec.seed)
    if spec.family == "ba":
        return generate_ba(spec.n, spec.power, spec.m, spec.seed)
    return generate_ws(spec.n, spec.nei, spec.p, spec.seed)


def generate_er(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each unordered pair is an edge independently with probability p."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(len(iu)) < p
    edges = np.column_stack([iu[mask], ju[mask]])
    return from_edges(n, edges)


def generate_ba(n: int, power: float, m: int, seed: int) -> Graph:
    """Preferential attachment starting from a single vertex.

    Each new vertex attaches m edges (fewer when fewer vertices exist) to
    distinct existing vertices drawn with probability proportional to
    (degree + 1)**power. The +1 smoothing makes degree-0 vertices
    reachable and reduces power=0 to uniform attachment.
    """
    rng = np.random.default_rng(seed)
    deg = np.zeros(n, dtype=np.int64)
    src: list[int] = []
    dst: list[int] = []
    for v in range(1, n):
        take = min(m, v)
        weights = (deg[:v] + 1.0) ** power
        if take == v:
            targets = np.arange(v)
        else:
            targets = rng.choice(v, size=take, replace=False, p=weights / weights.sum())
        for t in targets:
            src.append(v)
            dst.append(int(t))
            deg[t] += 1
        deg[v] += take
    edges = np.column_stack([np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)])
    return from_edges(n, edges)


def generate_ws(n: int, nei: int, p: float, seed: int) -> Graph:
    """Watts-Strogatz ring lattice with per-edge rewiring.

    The lattice connects every vertex to nei neighbors on each side
    (n*nei edges). Edges are visited ring-offset-major: offset 1..nei,
    vertex 0..n-1; each is rewired with probability p by replacing its
    far endpoint with a uniform vertex, redrawing on self-loops and
    duplicate edges (up to a bounded retry count, then keeping the
    original edge). The edge count is invariant under rewiring.
    """
    if nei > (n - 1) // 2:
        raise InvalidSpecError(f"ws lattice needs nei <= (n-1)/2, got nei={nei}, n={n}")
    rng = np.random.default_rng(seed)
    edge_set: set[tuple[int, int]] = set()

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    for j in range(1, nei + 1):
        for v in range(n):
            edge_set.add(key(v, (v + j) % n))
    skips = 0
    for j in range(1, nei + 1):
        for v in range(n):
            old = key(v, (v + j) % n)
            if old not in edge_set or rng.random() >= p:
                continue
            for _ in range(_WS_MAX_REDRAWS):
                w = int(rng.integers(n))
                if w == v:
                    continue
                new = key(v, w)
                if new in edge_set:
                    continue
                edge_set.remove(old)
                edge_set.add(new)
                break
            else:
                skips += 1
    edges = np.array(sorted(edge_set), dtype=np.int64).reshape(-1, 2)
    return from_edges(n, edges, report={"ws_rewire_skips": skips})
