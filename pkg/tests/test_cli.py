import json
import subprocess
import sys

import pytest

from ghwcodes.cli import main

T42 = ["--family", "t42", "--q", "2", "--k", "5", "--u2", "2", "--u3", "3"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_to_stdout(capsys):
    code, out, err = run(capsys, "construct", *T42)
    assert code == 0
    doc = json.loads(out)
    assert doc["construction"] == {"family": "T42", "q": 2, "k": 5, "u2": 2, "u3": 3}
    assert doc["n"] == 22 and doc["k"] == 5
    assert err.strip() == "[22,5,10]_2"


def test_construct_then_analyze_file(capsys, tmp_path):
    path = tmp_path / "c1.json"
    code, out, _ = run(capsys, "construct", *T42, "--out", str(path))
    assert code == 0 and out.strip() == "[22,5,10]_2"
    code, out, _ = run(capsys, "analyze", "--in", str(path), "--sswd", "2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "code_id\tr\tweight\tmultiplicity"
    assert lines[1:] == [f"c1\t2\t{w}\t{m}" for w, m in
                         [(16, 60), (17, 48), (18, 35), (19, 8), (20, 3), (22, 1)]]


def test_analyze_json_with_everything(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "T51", "--q", "3", "--k", "3", "--m", "3",
                       "--wd", "--sswd", "all", "--ghw", "all", "--griesmer", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ghw"] == {"1": 6, "2": 9, "3": 10}
    assert doc["sswd"][0]["entries"] == [[6, "4"], [7, "6"], [8, "3"]]
    assert doc["griesmer"]["r_griesmer_index"] == 2
    assert doc["weight_distribution"]["entries"][0] == [0, "1"]


def test_analyze_dense_and_pretty(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "T51", "--q", "3", "--k", "3", "--m", "3",
                       "--sswd", "3", "--dense", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 1 + 10
    code, out, _ = run(capsys, "analyze", "--family", "T51", "--q", "3", "--k", "3", "--m", "3",
                       "--sswd", "1", "--griesmer")
    assert "1-SSWD: {[6,4],[7,6],[8,3]}" in out and "defects: 1:1 2:0 3:0" in out


def test_verify_ok_and_corruption(capsys):
    code, out, _ = run(capsys, "verify", *T42)
    assert code == 0 and ": ok (" in out
    code, out, _ = run(capsys, "verify", *T42, "--r", "2", "--inject-corruption", "2", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "mismatch" and len(doc["mismatches"]) == 1


def test_verify_t51_reports_both_readings(capsys):
    code, out, _ = run(capsys, "verify", "--family", "T51", "--q", "3", "--k", "3", "--m", "3")
    assert code == 0
    assert out.count("note: r=") == 3


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "T42", "--q", "2", "--k", "5", "--u2", "3", "--u3", "4"],
    ["verify", "--family", "T33", "--q", "6", "--k", "4", "--t", "2", "--u", "2,3"],
    ["verify", "--family", "T51", "--q", "3", "--k", "3"],
    ["verify", *T42, "--r", "7"],
    ["verify", *T42, "--r", "2", "--inject-corruption", "3"],
    ["analyze", "--sswd", "1"],
    ["analyze", "--in", "/nonexistent/code.json", "--sswd", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("ghwcodes: ")


def test_argparse_errors_exit_2(capsys):
    for argv in (["table", "--paper-table", "9"], ["verify", *T42, "--parallel", "0"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "analyze", *T42, "--sswd", "2", "--budget", "10")
    assert code == 3 and "budget" in err
    code, out, _ = run(capsys, "verify", *T42, "--budget", "100")
    assert code == 3 and "BUDGET" in out


def test_table_outputs_are_deterministic(capsys):
    outs = set()
    for par in ("1", "4", "1"):
        code, out, _ = run(capsys, "table", "--paper-table", "3", "--format", "json", "--parallel", par)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    doc = json.loads(outs.pop())
    assert [c["code_id"] for c in doc["codes"]] == ["C1", "C2"]


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ghwcodes", "table", "--paper-table", "4",
                          "--format", "tsv"], capture_output=True, text=True, timeout=300)
    assert res.returncode == 0
    assert "C2\t1\t120\t51" in res.stdout.splitlines()
