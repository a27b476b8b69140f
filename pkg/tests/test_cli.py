import csv

import pytest

from fofsem.cli import main
from fofsem.graph import load_edge_list


def run(args):
    return main(args)


def test_generate_writes_edge_list(tmp_path):
    out = tmp_path / "g.txt"
    assert run(["generate", "--family", "er", "--n", "20", "--p", "0.5",
                "--seed", "3", "--out", str(out)]) == 0
    g = load_edge_list(out)
    assert g.vertex_count == 20


def test_generate_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (a, b):
        run(["generate", "--family", "ws", "--n", "30", "--nei", "2", "--p", "0.3",
             "--seed", "9", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()


def test_jaccard_subcommand(tmp_path):
    g = tmp_path / "tri.txt"
    g.write_text("0 1\n1 2\n0 2\n")
    out = tmp_path / "j.csv"
    assert run(["jaccard", str(g), "--out", str(out)]) == 0
    row = list(csv.DictReader(out.open()))[0]
    assert float(row["mean"]) == 1.0
    assert row["kind_a"] == "strictly-2" and row["kind_b"] == "2-and-1"


def test_synth_then_fit_pipeline(tmp_path):
    g = tmp_path / "g.txt"
    run(["generate", "--family", "er", "--n", "60", "--p", "0.3", "--seed", "1",
         "--out", str(g)])
    attrs = tmp_path / "attrs.csv"
    assert run(["synth", str(g), "--semantics", "strictly-2", "--agg", "mean",
                "--epsilon", "0.1", "--seed", "5", "--out", str(attrs)]) == 0
    fits = tmp_path / "fits.csv"
    assert run(["fit", str(g), str(attrs), "--agg", "mean", "--out", str(fits)]) == 0
    rows = list(csv.DictReader(fits.open()))
    assert len(rows) == 2
    by_kind = {r["fitted_semantics"]: r for r in rows}
    assert float(by_kind["strictly_k"]["log_likelihood"]) > float(
        by_kind["path_k"]["log_likelihood"])


def test_sweep_jaccard_with_config_and_overrides(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("families = er\nsizes = 20\ner_p = 0.4\ntrials = 99\n")
    out = tmp_path / "sweep.csv"
    assert run(["sweep-jaccard", "--config", str(cfg), "--trials", "3",
                "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len([r for r in rows if r["row_type"] == "trial"]) == 3  # flag wins


def test_sweep_model_cli(tmp_path):
    out = tmp_path / "m.csv"
    assert run(["sweep-model", "--families", "er", "--sizes", "30", "--er-p", "0.3",
                "--trials", "2", "--agg", "mean", "--epsilon", "0.1",
                "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 8  # 2 generating x 2 trials x 2 fitted


def test_snap_table_cli(tmp_path):
    out = tmp_path / "t.csv"
    assert run(["snap-table", "--data-dir", str(tmp_path), "--datasets",
                "ego-Facebook", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert rows[0]["error"].startswith("missing file")


def test_fetch_unknown_name_lists_valid(tmp_path):
    from fofsem.datasets import UnknownDatasetError

    with pytest.raises(UnknownDatasetError) as err:
        run(["fetch", "foo", "--dest", str(tmp_path)])
    assert "ego-Facebook" in str(err.value)


def test_fetch_no_names_lists_datasets(capsys):
    assert run(["fetch"]) == 0
    out = capsys.readouterr().out
    assert "ego-Facebook" in out and "4039 nodes" in out


def test_plot_data(tmp_path):
    sweep = tmp_path / "sweep.csv"
    run(["sweep-jaccard", "--families", "er", "--sizes", "10,20", "--er-p", "0.2,0.8",
         "--trials", "2", "--out", str(sweep)])
    plots = tmp_path / "plots"
    assert run(["plot-data", str(sweep), "--out-dir", str(plots)]) == 0
    assert (plots / "er_mean_jaccard.csv").exists()
    assert (plots / "er_mean_jaccard.png").exists()
    matrix = (plots / "er_mean_jaccard.csv").read_text().splitlines()
    assert matrix[0] == "p,n=10,n=20"
    assert run(["plot-data", str(sweep), "--out-dir", str(plots), "--no-figures"]) == 0


def test_plot_data_model(tmp_path):
    sweep = tmp_path / "m.csv"
    run(["sweep-model", "--families", "er", "--sizes", "30", "--er-p", "0.3,0.6",
         "--trials", "2", "--agg", "mean", "--epsilon", "0.1", "--out", str(sweep)])
    plots = tmp_path / "plots"
    assert run(["plot-data", str(sweep), "--out-dir", str(plots)]) == 0
    assert (plots / "er_mean_eps0.1_mean_ll.csv").exists()
    assert (plots / "er_mean_eps0.1_mean_ll.png").exists()
