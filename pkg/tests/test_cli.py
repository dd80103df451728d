import json

import pytest

from cubicaut.cli import cli_run


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_catalog_list(capsys):
    assert cli_run(["catalog", "--list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 9
    assert lines[0].startswith("J15")
    assert any(line.startswith("F-J9") for line in lines)


def test_verify_single_row(capsys):
    assert cli_run(["verify", "--variety", "J9a"]) == 0
    data = _json_out(capsys)
    assert data["summary"]["fail"] == 0
    assert data["claims"][0]["id"].startswith("J9a:")


def test_verify_j5b_reports_failure(capsys):
    # the row with the degenerate points exits nonzero by design
    assert cli_run(["verify", "--variety", "J5b"]) == 1
    data = _json_out(capsys)
    assert data["summary"]["fail"] == 1
    failing = [c for c in data["claims"] if c["status"] == "fail"]
    assert failing[0]["id"] == "J5b:all-A1"


def test_verify_report_file(tmp_path, capsys):
    target = tmp_path / "row.json"
    assert cli_run(["verify", "--variety", "J5a",
                    "--report", str(target)]) == 0
    capsys.readouterr()
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["summary"]["fail"] == 0


def test_aut_subcommand(capsys):
    assert cli_run(["aut", "--variety", "J5a"]) == 0
    data = _json_out(capsys)
    ids = {c["id"] for c in data["claims"]}
    assert ids == {"J5a:aut-order", "J5a:aut-fingerprint"}


def test_sing_variety(capsys):
    assert cli_run(["sing", "--variety", "J5a"]) == 0
    data = _json_out(capsys)
    ids = [c["id"] for c in data["claims"]]
    assert "J5a:singular-locus" in ids
    assert "J5a:types" in ids


def test_sing_input_file(tmp_path, capsys):
    src = tmp_path / "form.txt"
    src.write_text("# ten-node cyclic example\n"
                   "x0*x1*x2 + x1*x2*x3 + x2*x3*x4 + x3*x4*x0 + x4*x0*x1\n",
                   encoding="utf-8")
    assert cli_run(["sing", "--input", str(src)]) == 0
    data = _json_out(capsys)
    locus = [c for c in data["claims"] if c["id"] == "input:singular-locus"]
    assert locus[0]["status"] == "pass"
    assert "degree 10" in locus[0]["witness"]


def test_sing_input_non_isolated(tmp_path, capsys):
    src = tmp_path / "cone.txt"
    src.write_text("x0*x0*x4 + x1*x1*x1 - x0*x1*x2\n", encoding="utf-8")
    assert cli_run(["sing", "--input", str(src)]) == 1
    data = _json_out(capsys)
    assert data["claims"][0]["status"] == "fail"


def test_pr1_subcommand(capsys):
    assert cli_run(["pr1"]) == 0
    data = _json_out(capsys)
    assert data["summary"]["fail"] == 0
    assert data["summary"]["total"] >= 8


def test_eliminations_subcommand(capsys):
    assert cli_run(["eliminations"]) == 0
    data = _json_out(capsys)
    assert data["summary"]["fail"] == 0


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["verify"],
    ["verify", "--variety", "J15", "--all"],
    ["verify", "--variety", "NOPE"],
    ["aut"],
    ["sing"],
    ["catalog"],
])
def test_usage_errors(argv, capsys):
    assert cli_run(argv) == 2
    capsys.readouterr()


def test_missing_input_file(capsys):
    assert cli_run(["sing", "--input", "/definitely/not/here.txt"]) == 2
    capsys.readouterr()
