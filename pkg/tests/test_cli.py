"""End-to-end command-line behavior, exit codes, and output files."""

import json
import xml.etree.ElementTree as ET
from importlib import resources

import pytest

from coocnet.cli import main
from coocnet.graphout import from_json

CSV = (
    "id;subjects;year\n"
    "b1;Fiction|England;1961\n"
    "b2;Fiction|Science;1963\n"
    "b3;Fiction|Poetry|England;1965\n"
    "b4;Fiction|History;1972\n"
    "b5;Science|Travel;1974\n"
    "b6;History|Art;1976\n"
)


@pytest.fixture
def csv_file(tmp_path):
    f = tmp_path / "books.csv"
    f.write_text(CSV)
    return f


def base_config(tmp_path, **over):
    cfg = {
        "input": {
            "path": None,
            "format": "delimited",
            "delimiter": ";",
            "multi_value_separator": "|",
            "event_columns": ["subjects"],
            "attribute_columns": ["year"],
        },
        "selection": {"mode": "top_k", "k": 5},
        "analysis": {"mode": "population", "min_d": 0.0},
        "layout": {"algorithm": "fr", "seed": 0},
    }
    cfg.update(over)
    return cfg


def write_config(tmp_path, cfg):
    f = tmp_path / "run.json"
    f.write_text(json.dumps(cfg))
    return f


def run_cli(*argv):
    return main(list(argv))


# --- stats ---


def test_stats_table(csv_file, capsys):
    code = run_cli(
        "stats",
        "--input",
        str(csv_file),
        "--config",
        str(write_config(csv_file.parent, {"input": base_config(None)["input"] | {"path": None}})),
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "label\tfrequency\tcumulative_fraction"
    # hand counts over the six rows: Fiction 4, England 2, History 2,
    # Science 2, then Art, Poetry, Travel once each (mass 13)
    assert lines[1] == "Fiction\t4\t0.307692"
    assert lines[2] == "England\t2\t0.461538"
    assert lines[-1] == "Travel\t1\t1.000000"
    assert len(lines) == 8


def test_stats_needs_input(capsys):
    assert run_cli("stats") == 2
    assert "input" in capsys.readouterr().err


# --- run happy path ---


def run_config(tmp_path, csv_file, **over):
    cfg = base_config(tmp_path, **over)
    cfg["input"]["path"] = str(csv_file)
    return write_config(tmp_path, cfg)


def test_run_writes_graph_json(tmp_path, csv_file, capsys):
    out = tmp_path / "graph.json"
    code = run_cli(
        "run",
        "--config",
        str(run_config(tmp_path, csv_file)),
        "--deterministic",
        "--out-json",
        str(out),
    )
    assert code == 0
    graph = from_json(out.read_bytes())
    assert graph.meta["N"] == 6
    assert graph.meta["M"] == 5
    assert "created" not in graph.meta
    labels = [n.label for n in graph.nodes]
    assert labels[0] == "Fiction"
    assert all(n.x is not None for n in graph.nodes)
    report = capsys.readouterr().out
    assert "incidence: N=6, M=7" in report
    assert "selection: 7 -> 5 events" in report
    assert f"write: {out}" in report


def test_run_report_stages_and_timings(tmp_path, csv_file, capsys):
    out = tmp_path / "graph.json"
    run_cli("run", "--config", str(run_config(tmp_path, csv_file)), "--out-json", str(out))
    report = capsys.readouterr().out
    for stage in ("ingest:", "filter:", "incidence:", "selection:", "analysis:", "prune:", "layout:", "export:"):
        assert stage in report
    assert "[0." in report  # per-stage wall time


def test_run_deterministic_byte_identical(tmp_path, csv_file):
    cfg = run_config(tmp_path, csv_file)
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert run_cli("run", "--config", str(cfg), "--deterministic", "--out-json", str(a)) == 0
    assert run_cli("run", "--config", str(cfg), "--deterministic", "--out-json", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()


def test_run_timestamp_without_deterministic(tmp_path, csv_file):
    out = tmp_path / "graph.json"
    run_cli("run", "--config", str(run_config(tmp_path, csv_file)), "--out-json", str(out))
    meta = json.loads(out.read_text())["meta"]
    assert "created" in meta


def test_run_edges_dump(tmp_path, csv_file):
    out = tmp_path / "edges.tsv"
    code = run_cli(
        "run", "--config", str(run_config(tmp_path, csv_file)), "--out-edges", str(out)
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("i_label\tj_label\tc_ij")
    assert len(lines) > 1
    ds = [float(ln.split("\t")[5]) for ln in lines[1:]]
    assert ds == sorted(ds, reverse=True)


def test_run_graphml(tmp_path, csv_file):
    out = tmp_path / "graph.graphml"
    assert (
        run_cli(
            "run", "--config", str(run_config(tmp_path, csv_file)), "--out-graphml", str(out)
        )
        == 0
    )
    root = ET.fromstring(out.read_text())
    assert root.tag.endswith("graphml")


def test_run_html_when_viewer_vendored(tmp_path, csv_file):
    if not resources.files("coocnet").joinpath("assets/viewer.js").is_file():
        pytest.skip("viewer bundle not vendored")
    out = tmp_path / "graph.html"
    assert (
        run_cli("run", "--config", str(run_config(tmp_path, csv_file)), "--out-html", str(out))
        == 0
    )
    html = out.read_text()
    assert '<script type="application/json" id="graph-data">' in html


def test_run_flags_override_config(tmp_path, csv_file, capsys):
    out = tmp_path / "graph.json"
    run_cli(
        "run",
        "--config",
        str(run_config(tmp_path, csv_file)),
        "--deterministic",
        "--top-k",
        "3",
        "--out-json",
        str(out),
    )
    assert json.loads(out.read_text())["meta"]["M"] == 3


def test_run_seed_changes_positions(tmp_path, csv_file):
    cfg = run_config(tmp_path, csv_file)
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run_cli("run", "--config", str(cfg), "--deterministic", "--out-json", str(a))
    run_cli("run", "--config", str(cfg), "--deterministic", "--seed", "9", "--out-json", str(b))
    xa = [n["x"] for n in json.loads(a.read_text())["nodes"]]
    xb = [n["x"] for n in json.loads(b.read_text())["nodes"]]
    assert xa != xb


def test_run_sample_mode_meta(tmp_path, csv_file):
    out = tmp_path / "graph.json"
    run_cli(
        "run",
        "--config",
        str(run_config(tmp_path, csv_file)),
        "--mode",
        "sample",
        "--alpha",
        "0.4",
        "--out-json",
        str(out),
    )
    meta = json.loads(out.read_text())["meta"]
    assert meta["mode"] == "sample"
    assert meta["alpha"] == 0.4


def test_run_min_d_prunes(tmp_path, csv_file):
    cfg = run_config(tmp_path, csv_file)
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run_cli("run", "--config", str(cfg), "--out-json", str(a))
    run_cli("run", "--config", str(cfg), "--min-d", "99.0", "--out-json", str(b))
    assert len(json.loads(a.read_text())["edges"]) > 0
    assert json.loads(b.read_text())["edges"] == []


def test_run_filters_and_binning_sections(tmp_path, csv_file, capsys):
    out = tmp_path / "graph.json"
    cfg = run_config(
        tmp_path,
        csv_file,
        filters=[
            {"type": "nonempty-events"},
            {"type": "compare", "attribute": "year", "op": ">=", "value": 1963},
        ],
        binning={"attribute": "year", "kind": "decade"},
    )
    code = run_cli("run", "--config", str(cfg), "--out-json", str(out))
    assert code == 0
    report = capsys.readouterr().out
    assert "filter: 6 -> 5 scenarios" in report
    assert "bins:" in report
    marks = {n["label"] for n in json.loads(out.read_text())["nodes"] if n["marker"]}
    assert marks <= {"1960s", "1970s"}
    assert marks


def test_run_saturated_warning(tmp_path, capsys):
    f = tmp_path / "sat.csv"
    f.write_text("id;subjects\nr1;A|B\nr2;A|C\nr3;A|B\n")
    cfg = write_config(
        tmp_path,
        {
            "input": {"path": str(f), "event_columns": ["subjects"]},
        },
    )
    out = tmp_path / "graph.json"
    assert run_cli("run", "--config", str(cfg), "--out-json", str(out)) == 0
    assert "warning: saturated events excluded" in capsys.readouterr().out
    labels = {n["label"] for n in json.loads(out.read_text())["nodes"]}
    assert "A" in labels  # the node stays, only its edges are dropped


def test_run_ntriples_input(tmp_path, capsys):
    f = tmp_path / "books.nt"
    f.write_text(
        '<http://b/1> <http://x/subject> <http://s/Fiction> .\n'
        '<http://b/1> <http://x/subject> <http://s/England> .\n'
        '<http://b/2> <http://x/subject> <http://s/Fiction> .\n'
        '<http://b/1> <http://x/title> "ignored" .\n'
    )
    cfg = write_config(
        tmp_path,
        {
            "input": {
                "path": str(f),
                "format": "ntriples",
                "predicate_map": {"http://x/subject": "event-source"},
                "iri_label_suffix": True,
            },
        },
    )
    out = tmp_path / "graph.json"
    assert run_cli("run", "--config", str(cfg), "--out-json", str(out)) == 0
    report = capsys.readouterr().out
    assert "4 triples on 4 lines, 1 skipped" in report
    labels = {n["label"] for n in json.loads(out.read_text())["nodes"]}
    assert labels == {"Fiction", "England"}


# --- exit codes ---


def test_exit_2_unknown_config_key(tmp_path, csv_file, capsys):
    cfg = run_config(tmp_path, csv_file, extras={"x": 1})
    assert run_cli("run", "--config", str(cfg), "--out-json", str(tmp_path / "g.json")) == 2
    assert "extras" in capsys.readouterr().err


def test_exit_2_unknown_nested_key(tmp_path, csv_file, capsys):
    cfg = base_config(tmp_path)
    cfg["input"]["path"] = str(csv_file)
    cfg["selection"]["kk"] = 3
    f = write_config(tmp_path, cfg)
    assert run_cli("run", "--config", str(f), "--out-json", str(tmp_path / "g.json")) == 2
    assert "config.selection" in capsys.readouterr().err


def test_exit_2_missing_config_file(tmp_path, capsys):
    assert run_cli("run", "--config", str(tmp_path / "nope.json")) == 2
    assert "not found" in capsys.readouterr().err


def test_exit_2_invalid_config_json(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{nope")
    assert run_cli("run", "--config", str(f)) == 2


def test_exit_2_missing_input_file(tmp_path, csv_file, capsys):
    cfg = run_config(tmp_path, csv_file)
    assert (
        run_cli(
            "run",
            "--config",
            str(cfg),
            "--input",
            str(tmp_path / "gone.csv"),
            "--out-json",
            str(tmp_path / "g.json"),
        )
        == 2
    )


def test_exit_2_no_outputs(tmp_path, csv_file, capsys):
    assert run_cli("run", "--config", str(run_config(tmp_path, csv_file))) == 2
    assert "no outputs" in capsys.readouterr().err


def test_exit_2_output_dir_missing(tmp_path, csv_file, capsys):
    assert (
        run_cli(
            "run",
            "--config",
            str(run_config(tmp_path, csv_file)),
            "--out-json",
            str(tmp_path / "missing" / "g.json"),
        )
        == 2
    )


def test_exit_2_group_without_coverage(tmp_path, csv_file):
    assert (
        run_cli(
            "run",
            "--config",
            str(run_config(tmp_path, csv_file)),
            "--group",
            "1960s",
            "--out-json",
            str(tmp_path / "g.json"),
        )
        == 2
    )


def test_exit_2_conflicting_selection_flags(tmp_path, csv_file):
    assert (
        run_cli(
            "run",
            "--config",
            str(run_config(tmp_path, csv_file)),
            "--top-k",
            "3",
            "--coverage",
            "0.5",
            "--out-json",
            str(tmp_path / "g.json"),
        )
        == 2
    )


def test_exit_2_bad_selection_mode_in_config(tmp_path, csv_file):
    cfg = run_config(tmp_path, csv_file, selection={"mode": "zipf"})
    assert run_cli("run", "--config", str(cfg), "--out-json", str(tmp_path / "g.json")) == 2


def test_exit_2_bad_threads(tmp_path, csv_file):
    assert (
        run_cli(
            "run",
            "--config",
            str(run_config(tmp_path, csv_file)),
            "--threads",
            "0",
            "--out-json",
            str(tmp_path / "g.json"),
        )
        == 2
    )


def test_exit_2_record_error_is_usage(tmp_path, capsys):
    # malformed data is a usage problem: fix the file or the delimiter config
    f = tmp_path / "bad.csv"
    f.write_text("id;subjects\nr1;A\nr1;B\n")
    cfg = write_config(tmp_path, {"input": {"path": str(f), "event_columns": ["subjects"]}})
    code = run_cli("run", "--config", str(cfg), "--out-json", str(tmp_path / "g.json"))
    assert code == 1
    assert "duplicate" in capsys.readouterr().err


def test_exit_1_write_failure_cleans_up(tmp_path, csv_file, capsys):
    good = tmp_path / "edges.tsv"
    clash = tmp_path / "graph.json"
    clash.mkdir()  # os.replace onto a directory fails
    code = run_cli(
        "run",
        "--config",
        str(run_config(tmp_path, csv_file)),
        "--out-edges",
        str(good),
        "--out-json",
        str(clash),
    )
    assert code == 1
    assert "error in export" in capsys.readouterr().err
    assert not good.exists()  # partial outputs are removed


def test_run_group_selection_via_flags(tmp_path, csv_file, capsys):
    out = tmp_path / "graph.json"
    cfg = run_config(
        tmp_path,
        csv_file,
        binning={"attribute": "year", "kind": "decade"},
        selection=None,
    )
    # config.selection: null is rejected by key checking, so drop it
    raw = json.loads(cfg.read_text())
    del raw["selection"]
    cfg.write_text(json.dumps(raw))
    code = run_cli(
        "run",
        "--config",
        str(cfg),
        "--group",
        "1960s",
        "--group",
        "1970s",
        "--coverage",
        "1.0",
        "--out-json",
        str(out),
    )
    assert code == 0
    labels = {n["label"] for n in json.loads(out.read_text())["nodes"]}
    assert {"1960s", "1970s"} <= labels
    assert "grouped" in capsys.readouterr().out
