import json
from pathlib import Path

import pytest

from aspectra.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, golden", [(["factor", "--graph", "P6", "--output", "json"], "factor_p6.json"),
                                          (["kano", "--graph", "Gstar(6)", "--output", "json"], "kano_gstar6.json")])
def test_json_matches_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / golden).read_text())


def test_global_output_flag(capsys):
    code, out, _ = run(capsys, "--output", "json", "threshold", "--n", "25", "--alpha", "0")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "aspectra.report/1" and doc["kind"] == "threshold"
    assert abs(doc["result"]["value"] - 23.0018146011497) < 1e-12


def test_factor_text(capsys):
    code, out, _ = run(capsys, "factor", "--graph", "P6")
    assert code == 0 and out.strip() == "factor: yes; blocks: 0 1 2 / 3 4 5"
    code, out, _ = run(capsys, "factor", "--graph", "S4")
    assert out.strip() == "factor: no"


def test_radius_text(capsys):
    code, out, _ = run(capsys, "radius", "--graph", "K5", "--alpha", "1/4")
    assert code == 0 and out.startswith("lambda_1/4 = 4 ")
    assert "n-2 < lambda < n-1 for n=5: no" in out


def test_identities_summary(capsys):
    code, out, _ = run(capsys, "identities")
    assert code == 0
    assert "transcription audit: 15/15 passed" in out
    assert out.rstrip().endswith("56/56 passed")


def test_identities_unknown_filter(capsys):
    assert run(capsys, "identities", "--only", "nothing-like-this")[0] == 1


def test_inequalities(capsys):
    code, out, _ = run(capsys, "inequalities")
    assert code == 0 and "58/58 sign claims hold" in out


def test_case_scan(capsys):
    code, out, _ = run(capsys, "case-scan", "--n", "25", "--alpha", "1/3")
    assert code == 0
    assert "equality at s=1: yes; all s >= 2 below threshold: yes" in out


def test_scan_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "--n", "4", "--alpha", "1/2", "--output", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "graph6,n,alpha,lambda,above,factor,kano" and len(lines) == 7
    stream = tmp_path / "in.g6"
    stream.write_text("C~\nDhc\n")
    code, out, _ = run(capsys, "scan", "--graph6-stream", str(stream), "--alpha", "0", "--output", "json")
    assert code == 0 and len(json.loads(out)["result"]["records"]) == 2


def test_exception_flag(capsys):
    code, out, _ = run(capsys, "exception", "--n", "10", "--alpha", "0")
    assert code == 0
    assert "engines agree: yes" in out and "FLAG:" in out


@pytest.mark.parametrize("argv", [["radius", "--graph", "K3", "--alpha", "2"],
                                  ["scan", "--n", "5", "--alpha", "0.7"],
                                  ["factor", "--graph", "Q7"],
                                  ["threshold", "--n", "25"],
                                  ["no-such-command"],
                                  ["scan", "--alpha", "0"]])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 1


@pytest.mark.parametrize("argv", [["scan", "--n", "9", "--alpha", "0"], ["factor", "--graph", "K30"]])
def test_capacity_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("aspectra: capacity:")


def test_verification_failure_exits_3(capsys, monkeypatch):
    import aspectra.cli as cli
    from aspectra.verify.identities import IdentityResult

    real = cli.identity_suite

    def broken(only=None):
        res = real(only)
        return [IdentityResult(res[0].case, False, "x^0: 1 != 2")] + res[1:]

    monkeypatch.setattr(cli, "identity_suite", broken)
    assert main(["identities"]) == 3
