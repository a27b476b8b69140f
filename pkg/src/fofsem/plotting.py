"""Pivot sweep CSVs into figure-shaped matrices and render them.

The sweeps emit long-form per-trial rows; this module turns them into
(parameter x network size) mean matrices, written as CSV, and renders
matching matplotlib figures (PNG) alongside the delimited output.
"""
from __future__ import annotations

import csv
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _read_csv(path: str | Path) -> list[dict]:
    with open(path, newline="") as handle:
        return list(csv.DictReader(handle))


def _write_matrix(path: Path, row_label: str, row_keys, col_keys, cells) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([row_label] + [f"n={n}" for n in col_keys])
        for r in row_keys:
            writer.writerow([r] + [cells.get((r, n), "") for n in col_keys])


def _line_figure(path: Path, title: str, xlabel: str, series: dict) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, (xs, ys) in sorted(series.items()):
        ax.plot(xs, ys, marker="o", label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("mean Jaccard distance")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def pivot_jaccard(in_csv: str | Path, out_dir: str | Path, figures: bool = True) -> list[Path]:
    """Pivot a jaccard-sweep CSV into per-family mean matrices.

    ER: rows p, cols n. BA: rows power, cols n. WS: one matrix per nei,
    rows rewiring p, cols n. Returns the paths written.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [r for r in _read_csv(in_csv) if r["row_type"] == "grid_mean"]
    written: list[Path] = []
    groups: dict[tuple, dict] = defaultdict(dict)
    for r in rows:
        family = r["family"]
        n = int(r["n"])
        value = float(r["mean_jaccard"])
        if family == "er":
            groups[("er",)][(float(r["p"]), n)] = value
        elif family == "ba":
            groups[("ba",)][(float(r["power"]), n)] = value
        else:
            groups[("ws", int(r["nei"]))][(float(r["p"]), n)] = value
    for key, cells in sorted(groups.items()):
        family = key[0]
        stem = family if len(key) == 1 else f"{family}_nei{key[1]}"
        row_label = "power" if family == "ba" else "p"
        row_keys = sorted({rk for rk, _ in cells})
        col_keys = sorted({ck for _, ck in cells})
        matrix_path = out / f"{stem}_mean_jaccard.csv"
        _write_matrix(matrix_path, row_label, row_keys, col_keys, cells)
        written.append(matrix_path)
        if figures:
            series = {
                f"n={n}": (
                    [rk for rk in row_keys if (rk, n) in cells],
                    [cells[(rk, n)] for rk in row_keys if (rk, n) in cells],
                )
                for n in col_keys
            }
            fig_path = out / f"{stem}_mean_jaccard.png"
            _line_figure(fig_path, f"{stem}: mean Jaccard by {row_label}",
                         row_label, series)
            written.append(fig_path)
    return written


def pivot_model(in_csv: str | Path, out_dir: str | Path, figures: bool = True) -> list[Path]:
    """Aggregate a model-sweep CSV into mean log-likelihood matrices.

    One matrix per (family, agg, epsilon): rows are the family's primary
    parameter, columns are (generating, fitted) semantics pairs, averaged
    over trials and network sizes.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [r for r in _read_csv(in_csv) if r["log_likelihood"]]
    sums: dict[tuple, float] = defaultdict(float)
    counts: dict[tuple, int] = defaultdict(int)
    for r in rows:
        family = r["family"]
        param = float(r["power"]) if family == "ba" else float(r["p"])
        key = (family, r["agg"], float(r["epsilon"]), param,
               r["generating_semantics"], r["fitted_semantics"])
        sums[key] += float(r["log_likelihood"])
        counts[key] += 1
    written: list[Path] = []
    groups = sorted({k[:3] for k in sums})
    for family, agg, eps in groups:
        params = sorted({k[3] for k in sums if k[:3] == (family, agg, eps)})
        pairs = sorted({(k[4], k[5]) for k in sums if k[:3] == (family, agg, eps)})
        path = out / f"{family}_{agg}_eps{eps}_mean_ll.csv"
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["param"] + [f"gen={g}/fit={f}" for g, f in pairs])
            for param in params:
                row = [param]
                for g, f in pairs:
                    key = (family, agg, eps, param, g, f)
                    row.append(sums[key] / counts[key] if counts[key] else "")
                writer.writerow(row)
        written.append(path)
        if figures:
            fig, ax = plt.subplots(figsize=(6, 4))
            for g, f in pairs:
                ys = [sums[(family, agg, eps, p, g, f)]
                      / counts[(family, agg, eps, p, g, f)] for p in params]
                ax.plot(params, ys, marker="o", label=f"gen={g}, fit={f}")
            ax.set_xlabel("power" if family == "ba" else "p")
            ax.set_ylabel("mean log-likelihood")
            ax.set_title(f"{family}, agg={agg}, eps={eps}")
            ax.legend(fontsize=8)
            fig.tight_layout()
            fig_path = out / f"{family}_{agg}_eps{eps}_mean_ll.png"
            fig.savefig(fig_path, dpi=150)
            plt.close(fig)
            written.append(fig_path)
    return written


def pivot_csv(in_csv: str | Path, out_dir: str | Path, figures: bool = True) -> list[Path]:
    """Dispatch on the input CSV's header to the matching pivot."""
    with open(in_csv, newline="") as handle:
        header = next(csv.reader(handle))
    if "mean_jaccard" in header and "row_type" in header:
        return pivot_jaccard(in_csv, out_dir, figures)
    if "log_likelihood" in header:
        return pivot_model(in_csv, out_dir, figures)
    raise ValueError(f"{in_csv}: not a recognized sweep CSV")
