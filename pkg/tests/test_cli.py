"""Command-line surface: reports, determinism, exit codes."""

import json

import pytest

from symprime.cli import main


@pytest.fixture()
def problem_files(tmp_path):
    line = tmp_path / "line.json"
    line.write_text(json.dumps({"lambda": ["inf", "inf"], "e": [1, 1],
                                "Z": ["t1+t2"]}))
    origin2 = tmp_path / "origin2.json"
    origin2.write_text(json.dumps({"lambda": ["inf"], "e": [2], "Z": ["t1"]}))
    origin3 = tmp_path / "origin3.json"
    origin3.write_text(json.dumps({"lambda": ["inf"], "e": [3], "Z": ["t1"]}))
    circle = tmp_path / "circle.json"
    circle.write_text(json.dumps({"lambda": ["inf", "inf"], "e": [2, 2],
                                  "Z": ["t1^2+t2^2-1"]}))
    return {"line": str(line), "origin2": str(origin2),
            "origin3": str(origin3), "circle": str(circle)}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_contain_command(problem_files, capsys):
    code, report = run(capsys, "contain", problem_files["line"], problem_files["origin2"])
    assert code == 0
    assert report["contains"] is True and report["separator"] is None
    assert report["version"] and report["budgets"]["max_degree"] == 120
    code, report = run(capsys, "contain", problem_files["line"], problem_files["origin3"])
    assert code == 0 and report["contains"] is False
    assert report["separator"] is not None


def test_psi0_command(capsys):
    code, report = run(capsys, "psi0", "--lambda", "inf,inf", "--e", "2,2")
    assert code == 0
    assert {json.dumps(s, sort_keys=True) for s in report["psi0"]} == {
        json.dumps({"lambda": ["inf"], "e": [5]}, sort_keys=True),
        json.dumps({"lambda": ["inf", 1], "e": [3, 1]}, sort_keys=True),
        json.dumps({"lambda": ["inf", 1, 1], "e": [1, 1, 1]}, sort_keys=True)}


def test_member_command(problem_files, capsys):
    code, report = run(capsys, "member", problem_files["origin2"], "--poly", "x1^2")
    assert code == 0 and report["member"] is True
    code, report = run(capsys, "member", problem_files["origin2"], "--poly", "x1")
    assert code == 0 and report["member"] is False


def test_member_stdin(problem_files, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("x1^2 + x2^2"))
    code, report = run(capsys, "member", problem_files["origin2"], "--poly", "-")
    assert code == 0 and report["member"] is True


def test_theta_command(problem_files, capsys):
    code, report = run(capsys, "theta", problem_files["circle"],
                       "--lambda", "inf", "--e", "3")
    assert code == 0
    assert report["theta"] == ["t1^2 - 1/2"]
    assert len(report["components"]) == 1
    assert report["components"][0]["E"] == [1, 2]


def test_gens_command(problem_files, capsys):
    code, report = run(capsys, "gens", problem_files["origin2"])
    assert code == 0
    assert "x1^2" in report["generators"]


def test_witness_command(problem_files, capsys):
    code, report = run(capsys, "witness", problem_files["line"],
                       "--lambda", "inf", "--e", "3")
    assert code == 0
    assert report["layout"]["m"] == 3
    assert report["witness"].startswith("x1^2*x2")
    # good pairs exist but no point given -> input error
    code, _ = run(capsys, "witness", problem_files["circle"],
                  "--lambda", "inf", "--e", "3")
    assert code == 2
    code, report = run(capsys, "witness", problem_files["circle"],
                       "--lambda", "inf", "--e", "3", "--point", "1")
    assert code == 0 and "x1^2" in report["witness"]


def test_contract_verify_command(capsys):
    code, report = run(capsys, "contract-verify", "-n", "2", "-q", "2,2", "--char", "0")
    assert code == 0 and report["verified"] is True
    assert report["basis"] == ["x1^3 - 3*x1^2*x2 + 3*x1*x2^2 - x2^3"]
    code, report = run(capsys, "contract-verify", "-n", "2", "-q", "2,2", "--char", "2")
    assert code == 0 and report["basis"] == ["x1^2 + x2^2"]


def test_radical_command(problem_files, capsys, tmp_path):
    origin1 = tmp_path / "origin1.json"
    origin1.write_text(json.dumps({"lambda": ["inf"], "e": [1], "Z": ["t1"]}))
    code, report = run(capsys, "radical", problem_files["origin2"], str(origin1))
    assert code == 0
    assert report["includes_zero"] is False
    assert len(report["primes"]) == 1 and report["primes"][0]["e"] == [2]
    code, report = run(capsys, "radical", "--zero", problem_files["origin2"])
    assert code == 0 and report["includes_zero"] is True and report["primes"] == []


def test_spectrum_slice_command(problem_files, capsys):
    code, report = run(capsys, "spectrum-slice", problem_files["circle"],
                       "--target", "inf;3", "--target", "inf,inf;2,2")
    assert code == 0
    assert report["slices"]["(inf);(3)"] == ["t1^2 - 1/2"]
    assert report["slices"]["(inf,inf);(2,2)"] == ["t1^2 + t2^2 - 1"]


def test_deterministic_output(problem_files, capsys):
    _, first = run(capsys, "contain", problem_files["line"], problem_files["origin2"])
    code = main(["contain", problem_files["line"], problem_files["origin2"]])
    second = capsys.readouterr().out
    assert json.loads(second) == first
    # byte-level determinism
    main(["psi0", "--lambda", "inf", "--e", "2"])
    a = capsys.readouterr().out
    main(["psi0", "--lambda", "inf", "--e", "2"])
    b = capsys.readouterr().out
    assert a == b


def test_input_error_exit_code(problem_files, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["contain", str(bad), problem_files["origin2"]]) == 2
    assert main(["member", problem_files["origin2"], "--poly", "2x1"]) == 2
    capsys.readouterr()


def test_budget_exit_code(capsys):
    code = main(["contract-verify", "-n", "2", "-q", "2,2", "--max-degree", "2"])
    assert code == 3
    capsys.readouterr()


def test_version_embedded(problem_files, capsys):
    import symprime
    _, report = run(capsys, "psi0", "--lambda", "inf", "--e", "1")
    assert report["version"] == symprime.__version__
