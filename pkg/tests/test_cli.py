import json
import subprocess
import sys

import pytest

from djtrudi.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_det_json(capsys):
    code, out = run(capsys, "det-h", "--shape", "2", "--n", "2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["terms"]) == 9


def test_empty_skew_det(capsys):
    code, out = run(capsys, "det-e", "--shape", "2,1/2,1", "--n", "3")
    assert code == EXIT_OK
    assert json.loads(out) == {"terms": [{"coeff": 1, "monomial": []}]}


def test_sum_tableaux(capsys):
    code, out = run(capsys, "sum-tableaux", "--shape", "2", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    leg = json.loads(out)["legs"][0]
    assert leg == {"leg": "tableau", "status": "pass", "terms": 9}


def test_sum_paths_and_positive(capsys):
    for cmd in ("sum-paths", "sum-first", "sum-positive"):
        code, out = run(capsys, cmd, "--shape", "2,1", "--n", "2", "--format", "json")
        assert code == EXIT_OK
        assert all(leg["status"] == "pass" for leg in json.loads(out)["legs"])


def test_positivity_legs_are_skipped(capsys):
    code, out = run(capsys, "sum-positive", "--shape", "2,2,2", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    assert {leg["status"] for leg in json.loads(out)["legs"]} == {"skipped"}


@pytest.mark.parametrize("argv", [
    ["det-h", "--shape", "1,2"],
    ["det-h", "--shape", "2", "--n", "0"],
    ["det-h", "--shape", "2", "--n", "5"],
    ["det-h", "--shape", "4,3,3"],
    ["det-h", "--shape", "2,2", "--trunc", "1"],
    ["render", "--shape", "2", "--index", "999"],
    ["no-such-command"],
])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    assert code == EXIT_USAGE


def test_check_rules(capsys):
    code, out = run(capsys, "check-rules", "--shape", "2,2", "--n", "3", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["hv_tableaux"] == rep["E_vs_E_prime_agree"]


def test_verify_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "series", "--suite", "paths")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 2 and all(line.startswith("PASS") for line in lines)


def test_verify_corrupted_fixture(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"shape": "2", "n": 2, "tableaux": 9}))
    code, _ = run(capsys, "verify", "--suite", "series", "--fixture", str(good))
    assert code == EXIT_OK
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"shape": "2", "n": 2, "tableaux": 10},
                               {"shape": "1", "n": 2, "det": {"terms": [{"coeff": 1, "monomial": []}]}}]))
    code, out = run(capsys, "verify", "--suite", "series", "--fixture", str(bad), "--format", "json")
    assert code == EXIT_FAIL
    names = {f["invariant"] for f in json.loads(out)["failures"]}
    assert names == {"fixture tableau count", "fixture det"}


def test_render_outputs(tmp_path, capsys):
    code, out = run(capsys, "render", "--shape", "2,1", "--n", "2")
    assert code == EXIT_OK and "1" in out
    code, out = run(capsys, "render", "--shape", "2,2", "--object", "pair", "--klass", "II")
    assert code == EXIT_OK and "region" in out
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for f in (a, b):
        assert main(["render", "--shape", "2,1", "--render", "svg", "--out", str(f)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_graphs_selftest(capsys):
    code, out = run(capsys, "graphs-selftest", "--max-vertices", "6")
    assert code == EXIT_OK


def test_report_writes_table_and_figure(tmp_path, capsys):
    base = tmp_path / "rep" / "sums"
    code, out = run(capsys, "report", "--shapes", "1", "2,1", "--ns", "2", "--out", str(base))
    assert code == EXIT_OK
    tsv = base.with_suffix(".tsv").read_text().splitlines()
    assert tsv[0].split("\t")[:3] == ["shape", "n", "positivity"]
    assert len(tsv) == 3
    assert base.with_suffix(".svg").stat().st_size > 0


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "djtrudi.cli", "det-h", "--shape", "1", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["terms"]
