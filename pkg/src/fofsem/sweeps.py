"""Experiment harness: grid sweeps and the real-network Jaccard table.

Work units are (grid point, trial) batches; each derives its own seed
with mix_seed(base_seed, grid_index, trial_index), so a sweep's CSV is
byte-identical across reruns and worker counts. Rows are written in grid
order, never completion order.
"""
from __future__ import annotations

import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .config import ConfigError, ExperimentConfig
from .datasets import DATASETS, dataset_path
from .generators import GeneratorSpec, InvalidSpecError, generate
from .graph import load_edge_list
from .modelfit import DegenerateCovariateError, compare_semantics
from .neighborhoods import SemanticsKind
from .seeds import mix_seed
from .setstats import jaccard_graph
from .synth import AggKind, make_attribute_table

JACCARD_COLUMNS = [
    "family", "n", "p", "power", "m", "nei", "k", "kind_a", "kind_b",
    "trial", "seed", "row_type", "mean_jaccard", "max_jaccard", "n_both_empty",
]

MODEL_COLUMNS = [
    "family", "n", "p", "power", "m", "nei", "trial", "seed",
    "generating_semantics", "agg", "epsilon", "fitted_semantics",
    "beta0", "beta1", "sigma2", "log_likelihood", "n_used",
    "tie", "floored", "error",
]

SNAP_COLUMNS = [
    "dataset", "nodes", "edges", "kind_a", "kind_b", "k",
    "mean_jaccard", "max_jaccard", "n_both_empty", "wall_time_ms", "error",
]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _spec_fields(spec: GeneratorSpec) -> list:
    """Grid coordinates for CSV rows; inapplicable parameters stay blank."""
    p = spec.p if spec.family in ("er", "ws") else None
    power = spec.power if spec.family == "ba" else None
    m = spec.m if spec.family == "ba" else None
    nei = spec.nei if spec.family == "ws" else None
    return [spec.family, spec.n, p, power, m, nei]


def build_grid(cfg: ExperimentConfig) -> list[GeneratorSpec]:
    """Enumerate grid points in deterministic config order.

    Combinations that violate a family invariant (e.g. a WS lattice with
    nei > (n-1)/2, present in the default paper grid at n=10) are
    skipped rather than rejected.
    """
    points: list[GeneratorSpec] = []
    for family in cfg.families:
        if family == "er":
            for n in cfg.sizes:
                for p in cfg.er_p:
                    points.append(GeneratorSpec("er", n, p=p))
        elif family == "ba":
            for n in cfg.sizes:
                for power in cfg.ba_power:
                    points.append(GeneratorSpec("ba", n, power=power, m=cfg.ba_m))
        else:
            for n in cfg.sizes:
                for nei in cfg.ws_nei:
                    if nei > (n - 1) // 2:
                        continue
                    for p in cfg.ws_p:
                        points.append(GeneratorSpec("ws", n, p=p, nei=nei))
    for point in points:
        point.validate()
    return points


def _open_out(out: str | Path):
    if out in ("-", None):
        return sys.stdout, False
    path = Path(out)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    return path.open("w", newline=""), True


def _map_units(worker, units, workers: int):
    """Apply ``worker`` over units, preserving unit order."""
    if workers <= 1:
        for unit in units:
            yield worker(unit)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(worker, units, chunksize=1)


# ---------------------------------------------------------------------------
# jaccard sweep


def _jaccard_unit(unit) -> list[list]:
    cfg, gidx, spec = unit
    rows: list[list] = []
    means: list[float] = []
    maxes: list[float] = []
    for trial in range(cfg.trials):
        seed = mix_seed(cfg.base_seed, gidx, trial)
        graph = generate(GeneratorSpec(**{**spec.__dict__, "seed": seed}))
        summary = jaccard_graph(
            graph, SemanticsKind.SHORTEST_K, SemanticsKind.PATH_K, k=cfg.k)
        rows.append(_spec_fields(spec) + [
            cfg.k, SemanticsKind.SHORTEST_K.value, SemanticsKind.PATH_K.value,
            trial, seed, "trial", summary.mean, summary.max, summary.n_both_empty,
        ])
        means.append(summary.mean)
        maxes.append(summary.max)
    rows.append(_spec_fields(spec) + [
        cfg.k, SemanticsKind.SHORTEST_K.value, SemanticsKind.PATH_K.value,
        None, None, "grid_mean",
        float(np.mean(means)), float(np.max(maxes)), None,
    ])
    return rows


def run_jaccard_sweep(cfg: ExperimentConfig, out: str | Path | None = None) -> None:
    cfg.validate()
    grid = build_grid(cfg)
    if not grid:
        raise ConfigError("empty sweep grid")
    stream, own = _open_out(out if out is not None else cfg.out)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(JACCARD_COLUMNS)
        units = [(cfg, gidx, spec) for gidx, spec in enumerate(grid)]
        for rows in _map_units(_jaccard_unit, units, cfg.workers):
            for row in rows:
                writer.writerow([_fmt(x) for x in row])
    finally:
        if own:
            stream.close()


# ---------------------------------------------------------------------------
# model sweep


def _model_unit(unit) -> list[list]:
    cfg, gidx, spec, sem_ix, generating = unit
    rows: list[list] = []
    for agg_ix, agg_name in enumerate(cfg.agg):
        agg = AggKind(agg_name)
        for eps_ix, eps in enumerate(cfg.epsilon):
            for trial in range(cfg.trials):
                seed = mix_seed(cfg.base_seed, gidx, sem_ix, agg_ix, eps_ix, trial)
                graph = generate(GeneratorSpec(**{**spec.__dict__, "seed": seed}))
                table = make_attribute_table(
                    graph, generating, agg, eps, mix_seed(seed, 7))
                base = _spec_fields(spec) + [
                    trial, seed, generating.value, agg.value, eps]
                try:
                    fits = compare_semantics(graph, table, agg,
                                             drop_empty=cfg.drop_empty)
                except (DegenerateCovariateError, ValueError) as err:
                    rows.append(base + [None, None, None, None, None, None,
                                        None, None, str(err)])
                    continue
                for fit in fits:
                    rows.append(base + [
                        fit.semantics.value, fit.beta0, fit.beta1, fit.sigma2,
                        fit.log_likelihood, fit.n_used, fit.tie, fit.floored,
                        None,
                    ])
    return rows


def run_model_sweep(cfg: ExperimentConfig, out: str | Path | None = None) -> None:
    cfg.validate()
    grid = build_grid(cfg)
    if not grid:
        raise ConfigError("empty sweep grid")
    generating = [SemanticsKind.SHORTEST_K, SemanticsKind.PATH_K]
    units = [
        (cfg, gidx, spec, sem_ix, sem)
        for gidx, spec in enumerate(grid)
        for sem_ix, sem in enumerate(generating)
    ]
    stream, own = _open_out(out if out is not None else cfg.out)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(MODEL_COLUMNS)
        for rows in _map_units(_model_unit, units, cfg.workers):
            for row in rows:
                writer.writerow([_fmt(x) for x in row])
    finally:
        if own:
            stream.close()


# ---------------------------------------------------------------------------
# real-network table


def run_snap_table(cfg: ExperimentConfig, out: str | Path | None = None) -> None:
    """One row per dataset: counts, Jaccard summary, wall time.

    Missing or unreadable files produce an error row; remaining datasets
    are still processed. Wall times make this output non-reproducible
    byte-for-byte by design (it is a measurement, not a sweep).
    """
    cfg.validate()
    names = cfg.datasets or [
        name for name, info in DATASETS.items() if cfg.include_large or not info.large
    ]
    stream, own = _open_out(out if out is not None else cfg.out)
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(SNAP_COLUMNS)
        for name in names:
            row = _snap_row(cfg, name)
            writer.writerow([_fmt(x) for x in row])
            if own:
                stream.flush()
    finally:
        if own:
            stream.close()


def _snap_row(cfg: ExperimentConfig, name: str) -> list:
    kinds = [SemanticsKind.SHORTEST_K.value, SemanticsKind.PATH_K.value]
    try:
        path = dataset_path(name, cfg.data_dir)
    except ValueError as err:
        return [name, None, None, *kinds, cfg.k, None, None, None, None, str(err)]
    if not path.exists() and cfg.fetch:
        from .datasets import fetch_dataset

        try:
            fetch_dataset(name, cfg.data_dir)
        except Exception as err:
            return [name, None, None, *kinds, cfg.k, None, None, None, None, str(err)]
    if not path.exists():
        return [name, None, None, *kinds, cfg.k, None, None, None, None,
                f"missing file {path}"]
    start = time.perf_counter()
    graph = load_edge_list(path)
    summary = jaccard_graph(
        graph, SemanticsKind.SHORTEST_K, SemanticsKind.PATH_K, k=cfg.k)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return [name, graph.vertex_count, graph.edge_count, *kinds, cfg.k,
            summary.mean, summary.max, summary.n_both_empty,
            round(elapsed_ms, 3), None]
