import json
import math

import pandas as pd
import pytest

from hyperauthorship.cli import main

SYNTH = ["--papers", "300", "--authors", "1000", "--mu", "1.2", "--sigma", "0.8"]
SYNTH += ["--hyper-rate", "0.02", "--hyper-min", "30", "--hyper-max", "45", "--seed", "5"]
FAST = ["--omega-niter", "1", "--omega-nrand", "1", "--omega-max-nodes", "10"]


def read(path):
    return json.loads(path.read_text("utf-8"))


def files_under(directory):
    return {
        path.relative_to(directory).as_posix(): path.read_bytes()
        for path in sorted(directory.rglob("*"))
        if path.is_file()
    }


@pytest.fixture(scope="module")
def corpus_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus") / "corpus.csv"
    assert main(["synth", "--out", str(path), *SYNTH]) == 0
    return path


@pytest.fixture(scope="module")
def analyzed(corpus_file, tmp_path_factory):
    out = tmp_path_factory.mktemp("analyzed")
    assert main(["analyze", "--input", str(corpus_file), "--out", str(out), "--seed", "9", *FAST]) == 0
    return out


def test_synth_writes_both_formats(tmp_path, capsys):
    csv_path, jsonl_path = tmp_path / "c.csv", tmp_path / "c.jsonl"
    assert main(["synth", "--out", str(csv_path), *SYNTH]) == 0
    assert main(["synth", "--out", str(jsonl_path), "--format", "jsonl", *SYNTH]) == 0
    assert "wrote 300 papers" in capsys.readouterr().out

    assert csv_path.read_text("utf-8").startswith("paper_id,author_id\n")
    for fmt, path in (("long-csv", csv_path), ("jsonl", jsonl_path)):
        out = tmp_path / fmt
        assert main(["threshold", "--input", str(path), "--format", fmt, "--out", str(out)]) == 0
    assert read(tmp_path / "long-csv" / "threshold.json") == read(tmp_path / "jsonl" / "threshold.json")


def test_threshold(corpus_file, tmp_path, capsys):
    assert main(["threshold", "--input", str(corpus_file), "--out", str(tmp_path)]) == 0
    printed = capsys.readouterr().out
    assert "recommended cutoff" in printed
    assert printed.count("<- cutoff") == 1

    decision = read(tmp_path / "threshold.json")
    assert decision["method_used"] == "chebyshev"
    assert decision["override"] is False
    assert decision["cutoff"] == decision["recommended_cutoff"] < 30

    histogram = pd.read_csv(tmp_path / "plots" / "authors_per_paper_histogram.csv")
    assert histogram["papers"].sum() == 300
    assert histogram.loc[histogram["authors"] >= 30, "hyperauthored"].all()
    cumulative = pd.read_csv(tmp_path / "plots" / "authors_per_paper_cumulative.csv")
    assert cumulative["cumulative_fraction"].iloc[-1] == pytest.approx(1.0)


def test_threshold_cutoff_override(corpus_file, tmp_path, capsys):
    args = ["threshold", "--input", str(corpus_file), "--out", str(tmp_path), "--cutoff", "12"]
    assert main(args) == 0
    assert "detection skipped" in capsys.readouterr().out
    decision = read(tmp_path / "threshold.json")
    assert decision["cutoff"] == 12
    assert decision["override"] is True


def test_higher_coverage_never_lowers_the_cumulative_cutoff(corpus_file, tmp_path):
    cutoffs = []
    for coverage in ("0.7", "0.8", "0.9", "0.95", "0.99"):
        out = tmp_path / coverage
        assert main(["threshold", "--input", str(corpus_file), "--out", str(out), "--coverage", coverage]) == 0
        cutoffs.append(read(out / "threshold.json")["cumulative_cutoff"])
    assert cutoffs == sorted(cutoffs)


def test_analyze_outputs(analyzed):
    table1 = pd.read_csv(analyzed / "table1.csv", keep_default_na=False, na_values=["NA"])
    table2 = pd.read_csv(analyzed / "table2.csv", keep_default_na=False, na_values=["NA"])
    assert len(table1) == 11
    assert len(table2) == 16
    assert set(table2["scheme"]) == {"unweighted", "full", "newman", "jaccard"}

    rows = table1.set_index("metric")
    assert rows.loc["edges", "percent_change"] > 0
    assert rows.loc["density", "percent_change"] > 0
    assert rows.loc["papers", "with"] == 300
    assert math.isnan(rows.loc["omega", "percent_change"])

    comparison = read(analyzed / "comparison.json")
    assert comparison["metadata"]["removed_papers"] >= 1
    assert comparison["metadata"]["parameters"]["seed"] == 9
    assert set(read(analyzed / "best_weighting.json")) <= {"degree", "betweenness", "closeness", "eigenvector"}

    for side in ("without", "with"):
        directory = analyzed / f"network_{side}"
        assert (directory / "cohesion.json").exists()
        assert "omega_max_nodes=10" in read(directory / "topology.json")["omega_note"]
        for scheme in ("unweighted", "full", "newman", "jaccard"):
            assert (directory / f"edges_{scheme}.csv").exists()
            assert (directory / f"graph_{scheme}.json").exists()
            frame = pd.read_csv(directory / f"centrality_degree_{scheme}.csv")
            assert list(frame.columns) == ["author_id", "score", "rank"]
        assert (analyzed / "plots" / f"coauthors_per_author_{side}.csv").exists()


def test_analyze_is_deterministic(corpus_file, analyzed, tmp_path):
    again, threaded = tmp_path / "again", tmp_path / "threaded"
    base = ["analyze", "--input", str(corpus_file), "--seed", "9", *FAST]
    assert main([*base, "--out", str(again)]) == 0
    assert main([*base, "--out", str(threaded), "--jobs", "3"]) == 0

    reference = {name: data for name, data in files_under(analyzed).items() if not name.startswith("ego/")}
    assert files_under(again) == reference
    assert files_under(threaded) == reference


def test_keeping_every_paper_changes_nothing(corpus_file, tmp_path):
    args = ["analyze", "--input", str(corpus_file), "--out", str(tmp_path), "--seed", "2", "--cutoff", "inf"]
    assert main([*args, *FAST]) == 0
    assert read(tmp_path / "threshold.json")["cutoff"] == "inf"
    for table in ("table1.csv", "table2.csv"):
        changes = pd.read_csv(tmp_path / table, keep_default_na=False, na_values=["NA"])["percent_change"]
        assert (changes.dropna() == 0).all()


def test_analyze_subset_of_schemes(corpus_file, tmp_path):
    args = ["analyze", "--input", str(corpus_file), "--out", str(tmp_path), "--seed", "1"]
    assert main([*args, *FAST, "--schemes", "newman,unweighted"]) == 0
    table2 = pd.read_csv(tmp_path / "table2.csv")
    assert len(table2) == 8
    assert table2["scheme"].tolist()[:2] == ["unweighted", "newman"]
    assert not (tmp_path / "network_with" / "edges_full.csv").exists()


def test_ego_auto_grid(corpus_file, analyzed, capsys):
    args = ["ego", "--input", str(corpus_file), "--out", str(analyzed), "--seed", "9"]
    assert main([*args, "--auto-grid", "--ego", "nobody"]) == 0
    printed = capsys.readouterr().out
    assert "ego nobody: not found" in printed

    grid = read(analyzed / "ego" / "grid.json")
    assert set(grid["quadrants"]) == {"HH", "HL", "LH", "LL"}
    summary = read(analyzed / "ego" / "summary.json")
    assert summary["missing"] == ["nobody"]
    picked = [author for author in grid["representatives"].values() if author is not None]
    assert sorted(summary["egos"]) == sorted(picked)

    for ego in summary["egos"]:
        directory = analyzed / "ego" / ego
        profile = read(directory / "profile.json")
        assert profile["ego"] == ego
        centrality = pd.read_csv(directory / "centrality.csv")
        assert len(centrality) == 16
        assert set(centrality["table"]) == {"ego"}
        if profile["rank_with"] is not None:
            nodes = pd.read_csv(directory / "nodes_with.csv")
            assert nodes["is_ego"].sum() == 1
            assert len(nodes) == profile["nodes_with"]


@pytest.mark.parametrize(
    "args",
    [
        ["threshold", "--input", "missing.csv"],
        ["threshold", "--input", "{corpus}", "--coverage", "1.5"],
        ["analyze", "--input", "{corpus}", *FAST],
        ["analyze", "--input", "{corpus}", "--seed", "1", "--schemes", "fractional"],
        ["ego", "--input", "{corpus}", "--seed", "1"],
        ["ego", "--input", "{corpus}", "--seed", "1", "--ego", "A000001"],
    ],
)
def test_input_errors_exit_with_one(corpus_file, tmp_path, args, capsys):
    args = [arg.replace("{corpus}", str(corpus_file)) for arg in args]
    assert main([*args, "--out", str(tmp_path / "out")]) == 1
    assert capsys.readouterr().err.startswith("error [")


def test_computation_errors_exit_with_two(tmp_path, capsys):
    corpus = tmp_path / "tiny.csv"
    corpus.write_text("paper_id,author_id\np1,a\np2,b\n", "utf-8")
    assert main(["threshold", "--input", str(corpus), "--out", str(tmp_path / "t")]) == 2
    assert "at least 3 papers" in capsys.readouterr().err

    args = ["analyze", "--input", str(corpus), "--out", str(tmp_path / "a"), "--seed", "1", "--cutoff", "5"]
    assert main(args) == 2
