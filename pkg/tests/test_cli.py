import json

import pytest

from diagsets import cli
from diagsets.bruteforce import PropertyResult, SweepReport
from diagsets.diagonals import DiagonalSpec, Side, Witness, validate_witness
from diagsets.graph import VertexSet
from diagsets.graphio import parse_edge_list
from diagsets.upsets import parse_upset

C3_TEXT = "n 3\n0 1\n1 2\n2 0\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_analyze_c3_report_sets(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", C3_TEXT)
    rc = cli.main(["analyze", "--input", path, "--n", "1,2"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    by_spec = {entry["spec"]: entry["set"] for entry in report["specs"]}
    assert by_spec == {"D": [0, 1, 2], "Dn(1)": [0, 1, 2], "Dn(2)": [], "Dinf": []}
    assert report["graph"] == {"order": 3, "edges": 3, "loops": 0, "distinct_out_sets": 3}
    assert report["chain"]["ok"] is True
    assert report["seed"] is None


def test_analyze_report_witnesses_validate_on_reload(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", C3_TEXT)
    rc = cli.main(["analyze", "--input", path, "--n", "2", "--s", "finite(0,2)", "--spectra"])
    assert rc == 0
    raw = capsys.readouterr().out
    report = json.loads(raw)
    assert json.loads(json.dumps(report)) == report
    g = parse_edge_list(C3_TEXT)
    from diagsets.diagonals import Evidence

    for entry in report["specs"]:
        label = entry["spec"]
        if label == "D":
            spec = DiagonalSpec.d()
        elif label == "Dinf":
            spec = DiagonalSpec.dinf()
        elif label.startswith("Dn("):
            spec = DiagonalSpec.dn(int(label[3:-1]))
        else:
            spec = DiagonalSpec.ds(parse_upset(label[3:-1]))
        dx = VertexSet.from_indices(g.n, entry["set"])
        for row in entry["witnesses"]:
            ev = row["evidence"]
            evidence = None
            if ev is not None:
                if "walk" in ev:
                    evidence = Evidence(tuple(ev["walk"]))
                else:
                    evidence = Evidence(tuple(ev["infinite_tail"]), infinite_tail=True)
            witness = Witness(row["u"], Side(row["side"]), row["v"], evidence)
            validate_witness(g, spec, dx, witness)
    spectra = {entry["vertex"]: entry for entry in report["spectra"]}
    assert spectra[0]["literal"] == "up(t=1,d=3,r=0)"


def test_analyze_out_file(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", "# seed 7\n" + C3_TEXT)
    out = tmp_path / "report.json"
    rc = cli.main(["analyze", "--input", path, "--out", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert report["seed"] == 7


def test_analyze_rejects_bad_literal(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", C3_TEXT)
    assert cli.main(["analyze", "--input", path, "--s", "up(t=1)"]) == 2
    assert cli.main(["analyze", "--input", path, "--s", "finite()"]) == 2
    assert cli.main(["analyze", "--input", path, "--n", "0,2"]) == 2


def test_analyze_missing_file_is_usage_error(capsys):
    assert cli.main(["analyze", "--input", "/nonexistent/ghosts.edges"]) == 2


def test_analyze_malformed_edge_list(tmp_path):
    path = _write(tmp_path, "bad.edges", "0 zebra\n")
    assert cli.main(["analyze", "--input", path]) == 2


def test_spectrum_subcommand(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", C3_TEXT)
    rc = cli.main(["spectrum", "--input", path, "--vertex", "0"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "up(t=1,d=3,r=0)"


def test_spectrum_vertex_out_of_range(tmp_path, capsys):
    path = _write(tmp_path, "c3.edges", C3_TEXT)
    assert cli.main(["spectrum", "--input", path, "--vertex", "5"]) == 2


def test_gen_emits_parseable_deterministic_output(capsys):
    assert cli.main(["gen", "--n", "6", "--p", "0.4", "--seed", "42"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["gen", "--n", "6", "--p", "0.4", "--seed", "42"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.startswith("# seed 42\nn 6\n")
    parse_edge_list(first)


def test_gen_forbid_loops(capsys):
    assert cli.main(["gen", "--n", "5", "--p", "1.0", "--seed", "1", "--loops", "forbid"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert g.loops().to_list() == []
    assert g.edge_count() == 20


def test_verify_small_sweep_exits_zero(capsys):
    assert cli.main(["verify", "--order-max", "2"]) == 0
    out = capsys.readouterr().out
    assert "VERIFY OK" in out
    assert "18 graphs" in out


def test_verify_with_random_suite(capsys):
    rc = cli.main(["verify", "--order-max", "1", "--random", "6", "--size", "4..6", "--seed", "3"])
    assert rc == 0
    assert "randomized: 6 graphs" in capsys.readouterr().out


def test_verify_reports_failures_with_exit_one(monkeypatch, capsys):
    broken = SweepReport(
        graphs_checked=1,
        per_order={1: 1},
        properties=[PropertyResult("theorem[D]", passes=0, failures=1, first_counterexample="x")],
    )
    monkeypatch.setattr(cli, "exhaustive_sweep", lambda **kwargs: broken)
    assert cli.main(["verify", "--order-max", "1"]) == 1
    assert "VERIFY FAILED" in capsys.readouterr().out


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze"])  # missing --input
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_bad_size_range(capsys):
    assert cli.main(["verify", "--order-max", "1", "--random", "2", "--size", "6..4"]) == 2
