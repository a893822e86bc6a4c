"""Report assembly and the command-line surface: exit codes, JSON shape,
byte-stable output, and the error paths."""

from __future__ import annotations

import json

import pytest

from baolab import CheckReport, emit_report, report_from_findings
from baolab.cli import main
from baolab.report import exit_code


def test_report_objects():
    ok = CheckReport("laws", "pass", {"cases": 10})
    bad = report_from_findings("laws", [{"condition": "broken"}])
    assert ok.passed and not bad.passed
    assert bad.status == "fail"
    assert bad.witness == [{"condition": "broken"}]
    assert report_from_findings("laws", []).passed
    assert exit_code([ok]) == 0
    assert exit_code([ok, bad]) == 1
    assert exit_code([]) == 0


def test_emit_formats():
    ok = CheckReport("alpha", "pass", {"atoms": 4})
    text = emit_report([ok], "text")
    assert "alpha: PASS" in text
    blob = json.loads(emit_report([ok], "json"))
    assert blob == [{"check": "alpha", "status": "pass",
                     "witness": {"atoms": 4}}]


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_additivity_witness_command(capsys):
    code, out, err = _run(capsys, ["witness", "additivity", "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    witness = reports[0]["witness"]
    assert reports[0]["status"] == "pass"
    assert witness["sup"] == {"polarity": "cofinite", "support": []}
    assert witness["sup_of_images"] == {"polarity": "finite", "support": []}
    assert witness["op_of_sup"] == {"polarity": "cofinite", "support": []}
    assert witness["separating_y"]["polarity"] == "finite"
    assert witness["accepted_by_additivity_checker"] is True


def test_alpha_check_command(capsys):
    code, out, _ = _run(capsys, ["alpha", "check", "--graph", "interval",
                                 "--m", "20", "--N", "3", "--n", "3",
                                 "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["status"] == "pass"
    assert reports[0]["witness"]["atoms"] == 61


def test_output_is_byte_identical_across_runs(capsys):
    argv = ["witness", "recovery", "--seed", "7", "--samples", "20",
            "--format", "json"]
    _, first, _ = _run(capsys, argv)
    _, second, _ = _run(capsys, argv)
    assert first == second


def test_seed_is_reported_on_stderr(capsys):
    code, _, err = _run(capsys, ["witness", "recovery", "--samples", "5"])
    assert code == 0
    assert "1807" in err


def test_matrices_command(tmp_path, capsys):
    dump = tmp_path / "mats.json"
    code, out, _ = _run(capsys, ["matrices", "--graph", "complete", "--m", "2",
                                 "--n", "3", "--format", "json",
                                 "--dump", str(dump)])
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["witness"]["count"] == 229
    assert reports[0]["witness"]["ca_atoms"] == 229
    stored = json.loads(dump.read_text())
    assert len(stored) == 229
    assert stored[0] == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_schema_command_both_variants(capsys):
    code, out, _ = _run(capsys, ["check", "schema", "--universe", "2",
                                 "--variant", "corrected", "--format", "json"])
    assert code == 0
    code, out, _ = _run(capsys, ["check", "schema", "--universe", "2",
                                 "--variant", "literal", "--format", "json"])
    assert code == 1
    reports = json.loads(out)
    assert reports[0]["status"] == "fail"
    findings = reports[0]["witness"]
    assert findings[0]["counterexample"] == [0]


def test_lift_command(capsys):
    code, out, _ = _run(capsys, ["check", "lift", "--universe", "2",
                                 "--n", "3", "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["witness"]["point_classes"] == 2


def test_term_command(capsys):
    code, out, _ = _run(capsys, ["check", "term", "--universe", "2",
                                 "--n", "2", "--term", "c0(d01)",
                                 "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["witness"]["tuples"] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_bad_term_is_a_usage_error(capsys):
    code, _, err = _run(capsys, ["check", "term", "--universe", "2",
                                 "--n", "2", "--term", "c0(d01"])
    assert code == 2
    assert "parse" in err.lower()
    code, _, err = _run(capsys, ["check", "term", "--universe", "2",
                                 "--n", "2", "--term", "x | y"])
    assert code == 2


def test_axioms_command_round_trips_a_structure(tmp_path, capsys):
    from baolab import tuple_atom_structure
    structure, _ = tuple_atom_structure(2, 2)
    path = tmp_path / "structure.json"
    path.write_text(json.dumps(structure.to_json()))
    code, out, _ = _run(capsys, ["check", "axioms", "--file", str(path),
                                 "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["status"] == "pass"


def test_builder_run_and_replay(tmp_path, capsys):
    trace = tmp_path / "trace.jsonl"
    code, out, _ = _run(capsys, ["builder", "run", "--steps", "40", "--n", "3",
                                 "--trace", str(trace), "--verify",
                                 "--format", "json"])
    assert code == 0
    assert trace.exists()
    lines = trace.read_text().splitlines()
    assert len(lines) == 40

    code, _, _ = _run(capsys, ["builder", "replay", "--trace", str(trace),
                               "--steps", "40", "--n", "3"])
    assert code == 0

    # a forged byte anywhere in the trace has to surface
    forged = lines[:]
    forged[7] = forged[7].replace('"deferred":false', '"deferred":true ', 1)
    trace.write_text("\n".join(forged) + "\n")
    code, out, _ = _run(capsys, ["builder", "replay", "--trace", str(trace),
                                 "--steps", "40", "--n", "3",
                                 "--format", "json"])
    assert code == 1
    reports = json.loads(out)
    assert reports[0]["status"] == "fail"


def test_game_commands(capsys):
    code, out, _ = _run(capsys, ["game", "ef", "--a", "2", "--b", "3",
                                 "--rounds", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["witness"]["winner"] == "forall"

    code, out, _ = _run(capsys, ["game", "system", "--a", "2,3", "--b", "3,2",
                                 "--rounds", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["witness"]["agree"] is True

    code, out, _ = _run(capsys, ["game", "product", "--a", "2,unbounded",
                                 "--b", "2,unbounded", "--rounds", "3",
                                 "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["witness"]["winner"] == "exists"

    code, out, _ = _run(capsys, ["game", "square", "--graph", "edgeless",
                                 "--m", "1", "--n", "2", "--clique-bound", "4",
                                 "--rounds", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["witness"]["winner"] == "exists"


def test_graph_file_loading_and_errors(tmp_path, capsys):
    good = tmp_path / "graph.json"
    good.write_text(json.dumps({"kind": "explicit", "m": 3,
                                "edges": [[0, 1], [1, 2]]}))
    code, out, _ = _run(capsys, ["alpha", "check", "--graph", str(good),
                                 "--n", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out)[0]["witness"]["atoms"] == 7

    missing_kind = tmp_path / "nokind.json"
    missing_kind.write_text(json.dumps({"m": 3, "edges": []}))
    code, _, err = _run(capsys, ["alpha", "check", "--graph",
                                 str(missing_kind), "--n", "2"])
    assert code == 2
    assert "kind" in err

    broken = tmp_path / "broken.json"
    broken.write_text('{"kind": "explicit", "m": 3, ')
    code, _, err = _run(capsys, ["alpha", "check", "--graph", str(broken),
                                 "--n", "2"])
    assert code == 2

    dupes = tmp_path / "dupes.json"
    dupes.write_text(json.dumps({"kind": "explicit", "m": 3,
                                 "edges": [[0, 1], [1, 0], [1, 2]]}))
    code, _, err = _run(capsys, ["alpha", "check", "--graph", str(dupes),
                                 "--n", "2"])
    assert code == 0
    assert "duplicate" in err.lower()


def test_unknown_subcommand_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


def test_missing_required_graph_is_a_usage_error(capsys):
    code, _, err = _run(capsys, ["alpha", "check", "--n", "3"])
    assert code == 2


def test_report_battery(tmp_path, capsys):
    out_dir = tmp_path / "battery"
    code, out, _ = _run(capsys, ["report", "--out", str(out_dir),
                                 "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 13
    assert all(r["status"] == "pass" for r in reports)
    for name in ("report.json", "report.csv", "composition.png",
                 "matrix_census.png", "builder_growth.png", "game_grid.png"):
        assert (out_dir / name).exists(), name
    stored = json.loads((out_dir / "report.json").read_text())
    assert stored == reports
    csv_lines = (out_dir / "report.csv").read_text().splitlines()
    assert csv_lines[0].split(",")[:2] == ["check", "status"]
    assert len(csv_lines) == 14
