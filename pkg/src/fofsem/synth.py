"""Synthetic per-vertex attributes: treatment T and peer-driven outcome O.

The generative model: T_v ~ N(mu, sigma) with mu ~ U(-5, 5) and
sigma ~ U(0, 3) drawn once per trial, then
O_v = agg(T over the friends-of-friends set of v) + epsilon * z_v,
z_v ~ N(0, 1). The friends-of-friends set is built under a chosen
semantics at k=2, so the two semantics induce different true models.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph
from .neighborhoods import NeighborSet, SemanticsKind, members_k2
from .seeds import mix_seed


class AggKind(Enum):
    MEAN = "mean"
    DEGREE = "degree"


@dataclass(frozen=True)
class GenParams:
    mu: float
    sigma: float
    epsilon: float
    agg: AggKind
    semantics: SemanticsKind
    seed: int


@dataclass(frozen=True)
class AttributeTable:
    treatment: np.ndarray
    outcome: np.ndarray
    gen_params: GenParams


def gen_treatment(g: Graph, seed: int) -> tuple[np.ndarray, float, float]:
    """Draw mu ~ U(-5,5), sigma ~ U(0,3) once, then T_v ~ N(mu, sigma)."""
    rng = np.random.default_rng(seed)
    mu = float(rng.uniform(-5.0, 5.0))
    sigma = float(rng.uniform(0.0, 3.0))
    treatment = mu + sigma * rng.standard_normal(g.vertex_count)
    return treatment, mu, sigma


def aggregate(values: np.ndarray, nset: NeighborSet, agg: AggKind) -> float:
    """Mean of member values (0 for an empty set) or the set cardinality."""
    if not nset.kind.set_valued:
        raise ValueError("aggregate requires a set-valued neighbor set")
    if agg is AggKind.DEGREE:
        return float(nset.count)
    if nset.count == 0:
        return 0.0
    return float(values[nset.members].mean())


def peer_covariate(
    g: Graph, treatment: np.ndarray, semantics: SemanticsKind, agg: AggKind
) -> np.ndarray:
    """x_v = agg(treatment over semantics-set-of-v), for every vertex, k=2."""
    if not semantics.set_valued:
        raise ValueError("peer covariate requires a set-valued semantics")
    n = g.vertex_count
    x = np.zeros(n, dtype=np.float64)
    for v in range(n):
        members = members_k2(g, v, semantics)
        if agg is AggKind.DEGREE:
            x[v] = float(len(members))
        elif len(members):
            x[v] = float(treatment[members].mean())
    return x


def gen_outcome(
    g: Graph,
    treatment: np.ndarray,
    semantics: SemanticsKind,
    agg: AggKind,
    epsilon: float,
    seed: int,
) -> np.ndarray:
    """O_v = agg(T over friends-of-friends of v) + epsilon * N(0,1)."""
    x = peer_covariate(g, treatment, semantics, agg)
    noise = np.random.default_rng(seed).standard_normal(g.vertex_count)
    return x + epsilon * noise


def make_attribute_table(
    g: Graph,
    semantics: SemanticsKind,
    agg: AggKind,
    epsilon: float,
    seed: int,
) -> AttributeTable:
    """One synthetic trial; treatment and noise streams are derived from
    the trial seed independently, so changing only epsilon reuses the
    same noise draw."""
    treatment, mu, sigma = gen_treatment(g, mix_seed(seed, 0))
    outcome = gen_outcome(g, treatment, semantics, agg, epsilon, mix_seed(seed, 1))
    return AttributeTable(
        treatment=treatment,
        outcome=outcome,
        gen_params=GenParams(mu, sigma, epsilon, agg, semantics, seed),
    )


def write_attribute_csv(table: AttributeTable, destination) -> None:
    """CSV rows (vertex, T, O) under a comment header recording gen params."""
    own = isinstance(destination, str)
    out = open(destination, "w", newline="") if own else destination
    try:
        p = table.gen_params
        out.write(
            f"# mu={p.mu!r} sigma={p.sigma!r} epsilon={p.epsilon!r} "
            f"agg={p.agg.value} semantics={p.semantics.value} seed={p.seed}\n"
        )
        writer = csv.writer(out)
        writer.writerow(["vertex", "treatment", "outcome"])
        for v, (t, o) in enumerate(zip(table.treatment, table.outcome)):
            writer.writerow([v, repr(float(t)), repr(float(o))])
    finally:
        if own:
            out.close()


def read_attribute_csv(source) -> tuple[np.ndarray, np.ndarray]:
    """Read back (treatment, outcome) vectors; comment lines are skipped."""
    own = isinstance(source, str)
    handle = open(source, newline="") if own else source
    try:
        rows = [r for r in csv.reader(line for line in handle if not line.startswith("#"))]
    finally:
        if own:
            handle.close()
    body = rows[1:]  # header row
    t = np.array([float(r[1]) for r in body])
    o = np.array([float(r[2]) for r in body])
    return t, o
