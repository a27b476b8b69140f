"""Command-line interface.

Subcommands: generate, jaccard, synth, fit, sweep-jaccard, sweep-model,
snap-table, fetch, plot-data. Sweep subcommands read an optional config
file; every config field has a matching override flag.
"""
from __future__ import annotations

import argparse
import csv
import sys

from . import datasets as ds
from .config import ExperimentConfig, apply_overrides, parse_config_file
from .generators import GeneratorSpec, generate
from .graph import load_edge_list, write_edge_list
from .modelfit import compare_semantics
from .neighborhoods import SemanticsKind
from .plotting import pivot_csv
from .setstats import jaccard_graph
from .sweeps import run_jaccard_sweep, run_model_sweep, run_snap_table
from .synth import AggKind, AttributeTable, GenParams, make_attribute_table, \
    read_attribute_csv, write_attribute_csv

_SEMANTICS = {
    "strictly-2": SemanticsKind.SHORTEST_K,
    "2-and-1": SemanticsKind.PATH_K,
}


def _out_stream(path: str):
    return sys.stdout if path == "-" else open(path, "w", newline="")


def _add_sweep_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--seed", type=int, dest="base_seed")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--out")
    parser.add_argument("--families", type=lambda s: s.split(","))
    parser.add_argument("--sizes", type=lambda s: [int(x) for x in s.split(",")])
    parser.add_argument("--er-p", dest="er_p",
                        type=lambda s: [float(x) for x in s.split(",")])
    parser.add_argument("--ba-power", dest="ba_power",
                        type=lambda s: [float(x) for x in s.split(",")])
    parser.add_argument("--ba-m", dest="ba_m", type=int)
    parser.add_argument("--ws-nei", dest="ws_nei",
                        type=lambda s: [int(x) for x in s.split(",")])
    parser.add_argument("--ws-p", dest="ws_p",
                        type=lambda s: [float(x) for x in s.split(",")])
    parser.add_argument("--epsilon", type=lambda s: [float(x) for x in s.split(",")])
    parser.add_argument("--agg", type=lambda s: s.split(","))
    parser.add_argument("--drop-empty", dest="drop_empty", action="store_const", const=True)


def _sweep_config(args, experiment: str) -> ExperimentConfig:
    cfg = parse_config_file(args.config) if args.config else ExperimentConfig()
    overrides = {
        name: getattr(args, name, None)
        for name in ("base_seed", "trials", "workers", "out", "families", "sizes",
                     "er_p", "ba_power", "ba_m", "ws_nei", "ws_p", "epsilon",
                     "agg", "drop_empty", "data_dir", "include_large", "fetch",
                     "datasets")
    }
    cfg = apply_overrides(cfg, experiment=experiment, **overrides)
    cfg.validate()
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fofsem",
        description="Friends-of-friends semantics: Jaccard divergence and "
                    "peer-effect model selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit one synthetic graph as an edge list")
    p.add_argument("--family", required=True, choices=["er", "ba", "ws"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--power", type=float, default=1.0)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--nei", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("jaccard", help="Jaccard summary for one graph")
    p.add_argument("graph", help="edge-list file (gzip ok)")
    p.add_argument("--kind-a", default="strictly-2", choices=sorted(_SEMANTICS))
    p.add_argument("--kind-b", default="2-and-1", choices=sorted(_SEMANTICS))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--out", default="-")

    p = sub.add_parser("synth", help="generate a treatment/outcome attribute table")
    p.add_argument("graph")
    p.add_argument("--semantics", default="strictly-2", choices=sorted(_SEMANTICS))
    p.add_argument("--agg", default="mean", choices=["mean", "degree"])
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("fit", help="fit both semantics models on one graph + attributes")
    p.add_argument("graph")
    p.add_argument("attributes", help="CSV from the synth subcommand")
    p.add_argument("--agg", default="mean", choices=["mean", "degree"])
    p.add_argument("--drop-empty", action="store_true")
    p.add_argument("--out", default="-")

    p = sub.add_parser("sweep-jaccard", help="synthetic Jaccard sweep over a grid")
    _add_sweep_flags(p)

    p = sub.add_parser("sweep-model", help="model-selection sweep over a grid")
    _add_sweep_flags(p)

    p = sub.add_parser("snap-table", help="Jaccard table over local SNAP datasets")
    p.add_argument("--config")
    p.add_argument("--data-dir", dest="data_dir")
    p.add_argument("--datasets", type=lambda s: s.split(","))
    p.add_argument("--include-large", dest="include_large",
                   action="store_const", const=True)
    p.add_argument("--fetch", action="store_const", const=True,
                   help="download missing datasets first")
    p.add_argument("--out")

    p = sub.add_parser("fetch", help="download SNAP datasets")
    p.add_argument("names", nargs="*", help="dataset names; empty lists them")
    p.add_argument("--dest", default="data")
    p.add_argument("--all", action="store_true", help="fetch every non-road dataset")

    p = sub.add_parser("plot-data", help="pivot a sweep CSV into matrices + figures")
    p.add_argument("input", help="CSV produced by sweep-jaccard or sweep-model")
    p.add_argument("--out-dir", default="plots")
    p.add_argument("--no-figures", action="store_true",
                   help="write pivot CSVs only, skip PNG rendering")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "generate":
        spec = GeneratorSpec(args.family, args.n, p=args.p, power=args.power,
                             nei=args.nei, m=args.m, seed=args.seed)
        graph = generate(spec)
        out = _out_stream(args.out)
        write_edge_list(graph, out)
        if out is not sys.stdout:
            out.close()
        return 0

    if args.command == "jaccard":
        import time

        graph = load_edge_list(args.graph)
        start = time.perf_counter()
        summary = jaccard_graph(graph, _SEMANTICS[args.kind_a],
                                _SEMANTICS[args.kind_b], k=args.k)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        out = _out_stream(args.out)
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["dataset", "kind_a", "kind_b", "k", "mean", "max",
                         "n_both_empty", "wall_time_ms"])
        writer.writerow([args.graph, args.kind_a, args.kind_b, args.k,
                         repr(summary.mean), repr(summary.max), summary.n_both_empty,
                         round(elapsed_ms, 3)])
        if out is not sys.stdout:
            out.close()
        return 0

    if args.command == "synth":
        graph = load_edge_list(args.graph)
        table = make_attribute_table(graph, _SEMANTICS[args.semantics],
                                     AggKind(args.agg), args.epsilon, args.seed)
        out = _out_stream(args.out)
        write_attribute_csv(table, out)
        if out is not sys.stdout:
            out.close()
        return 0

    if args.command == "fit":
        graph = load_edge_list(args.graph)
        treatment, outcome = read_attribute_csv(args.attributes)
        table = AttributeTable(treatment, outcome, GenParams(
            0.0, 0.0, 0.0, AggKind(args.agg), SemanticsKind.SHORTEST_K, 0))
        fits = compare_semantics(graph, table, AggKind(args.agg),
                                 drop_empty=args.drop_empty)
        out = _out_stream(args.out)
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["fitted_semantics", "agg", "beta0", "beta1", "sigma2",
                         "log_likelihood", "n_used", "tie", "floored"])
        for fit in fits:
            writer.writerow([fit.semantics.value, args.agg, repr(fit.beta0),
                             repr(fit.beta1), repr(fit.sigma2),
                             repr(fit.log_likelihood), fit.n_used,
                             int(fit.tie), int(fit.floored)])
        if out is not sys.stdout:
            out.close()
        return 0

    if args.command == "sweep-jaccard":
        run_jaccard_sweep(_sweep_config(args, "jaccard-sweep"))
        return 0

    if args.command == "sweep-model":
        run_model_sweep(_sweep_config(args, "model-sweep"))
        return 0

    if args.command == "snap-table":
        run_snap_table(_sweep_config(args, "snap-table"))
        return 0

    if args.command == "fetch":
        if args.all:
            names = [n for n, info in ds.DATASETS.items() if not info.large]
        elif args.names:
            names = args.names
        else:
            for name, info in ds.DATASETS.items():
                print(f"{name}\t{info.nodes} nodes\t{info.edges} edges\t{info.url}")
            return 0
        for name in names:
            path = ds.fetch_dataset(name, args.dest)
            print(f"{name} -> {path}")
        return 0

    if args.command == "plot-data":
        for path in pivot_csv(args.input, args.out_dir, figures=not args.no_figures):
            print(path)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
