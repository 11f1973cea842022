import json
import subprocess
import sys

import pytest

from torus_growth.cli import main, verify


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "--p", "2", "--q", "2", "--terms", "4")
    assert code == 0
    assert "formula: [1, 6, 12, 18, 24]" in out
    assert "(1 + 4*t + t^2) / (1 - 2*t + t^2)" in out


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--p", "3", "--q", "5", "--terms", "0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == ["1"]
    assert json.dumps(data, indent=2) == out.rstrip("\n")


def test_series_oracles_agree(capsys):
    code, out, _ = run(capsys, "--format", "json", "series", "--p", "2", "--q", "3",
                       "--terms", "12", "--oracle", "both")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == data["bfs"] == data["grammar"]
    assert data["match"] is True


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--p", "2", "--q", "2", "--terms", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,a_n", "0,1", "1,6", "2,12", "3,18"]


def test_rate(capsys):
    code, out, _ = run(capsys, "rate", "--p", "2", "--q", "2")
    assert code == 0 and "omega = 1\n" in out
    code, out, _ = run(capsys, "rate", "--p", "2", "--q", "3", "--format", "json")
    assert abs(json.loads(out)["omega"] - 1.4142135624) < 1e-9
    code, out, _ = run(capsys, "rate", "--p", "3", "--q", "3", "--format", "json")
    data = json.loads(out)
    assert abs(data["omega"] - 2.0) < 1e-9 and data["lemma_gcd"] == 2


def test_perron_single(capsys):
    code, out, _ = run(capsys, "perron", "--p", "2", "--q", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "PERRON_DOMINANT"


def test_perron_scan_file(tmp_path, capsys):
    path = tmp_path / "scan.json"
    code, _, _ = run(capsys, "perron-scan", "--max", "4", "--out", str(path))
    assert code == 0
    text = path.read_text()
    data = json.loads(text)
    assert len(data) == 6
    by_pair = {(r["p"], r["q"]): r for r in data}
    assert by_pair[2, 3]["verdict"] == "EQUAL_MODULUS_DETECTED"
    assert json.dumps(data, indent=2) + "\n" == text


def test_perron_scan_small(capsys):
    code, out, _ = run(capsys, "perron-scan", "--max", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1 and data[0]["verdict"] == "NOT_APPLICABLE_2_2"


def test_perron_scan_gcd_one_dominant(capsys):
    _, out, _ = run(capsys, "perron-scan", "--max", "6", "--format", "json")
    for r in json.loads(out):
        if r["lemma_gcd"] == 1:
            assert r["verdict"] == "PERRON_DOMINANT"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--p", "4", "--q", "6", "--terms", "12", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["status"] == "OK" and "first_mismatch_index" not in rec
    code, out, _ = run(capsys, "verify", "--p", "3", "--q", "3", "--terms", "12")
    assert code == 0 and "odd-odd amalgam" in out and out.rstrip().endswith("OK")


def test_verify_record_routes():
    rec = verify(2, 5, 8)
    assert rec.status == "OK"
    assert rec.routes_compared == ["formula", "even-odd components", "symmetry", "bfs", "grammar"]
    assert rec.terms_checked == 9


def test_general(capsys):
    code, out, _ = run(capsys, "general", "--list", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["num"] == ["-1", "-3", "-2"]  # (1+t)(1+2t)/(1-t), den sign-normalized
    _, out35, _ = run(capsys, "general", "--list", "3,5", "--format", "json")
    _, series35, _ = run(capsys, "series", "--p", "3", "--q", "5", "--format", "json")
    a, b = json.loads(out35), json.loads(series35)
    assert (a["num"], a["den"]) == (b["num"], b["den"])


@pytest.mark.parametrize("argv", [
    ["verify", "--p", "1", "--q", "3"],
    ["general", "--list", "3,4"],
    ["series", "--p", "2"],
    ["series", "--p", "2", "--q", "x"],
    ["series", "--p", "2", "--q", "3", "--terms", "-1"],
    ["rate", "--p", "0", "--q", "3"],
    ["perron-scan", "--max", "1"],
    ["series", "--p", "2", "--q", "3", "--oracle", "kbmag"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_mismatch_exit_code(capsys, monkeypatch):
    from torus_growth import group
    from torus_growth.group import SphereCounts

    def broken(params, N):
        return SphereCounts(tuple([1] + [7] * N), (params.p, params.q))

    monkeypatch.setattr(group, "sphere_counts_bfs", broken)
    code, out, _ = run(capsys, "verify", "--p", "2", "--q", "3", "--terms", "5", "--format", "json")
    rec = json.loads(out)
    assert code == 1
    assert rec["status"] == "MISMATCH" and rec["first_mismatch_index"] == 1
    code, _, _ = run(capsys, "series", "--p", "2", "--q", "3", "--terms", "5", "--oracle", "bfs")
    assert code == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "torus_growth", "series", "--p", "2", "--q", "2",
                          "--terms", "2", "--format", "csv"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines() == ["n,a_n", "0,1", "1,6", "2,12"]
