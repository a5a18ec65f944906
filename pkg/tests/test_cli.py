import json
import os

from twosilt.cli import run
from conftest import FIXTURE_DIR


def test_borel_schur_dsl(capsys):
    assert run(["borel-schur", "--n", "2", "--r", "4", "--p", "2",
                "--emit", "dsl"]) == 0
    out = capsys.readouterr().out
    assert "vertices: 0 1 2 3 4" in out
    assert out.count("arrow ") == 8
    assert out.count("rel ") == 6


def test_enumerate_sign_csv_dot(tmp_path, capsys):
    code = run(["enumerate-sign", "--algebra", "bs:2,4,2",
                "--epsilon", "-,-,-,+,+", "--emit", "csv,dot",
                "--out", str(tmp_path)])
    assert code == 0
    dot = open(os.path.join(tmp_path, "enumerate-sign.dot")).read()
    assert dot.count("shape=circle") == 34
    csv_text = open(os.path.join(tmp_path, "enumerate-sign.csv")).read()
    assert csv_text.splitlines()[0].startswith("node,tau_tilting")


def test_enumerate_json(tmp_path):
    code = run(["enumerate", "--algebra", "square", "--emit", "json",
                "--out", str(tmp_path)])
    assert code == 0
    doc = json.load(open(os.path.join(tmp_path, "enumerate.json")))
    assert doc["node_count"] == 46


def test_budget_exhaustion_exit_code(tmp_path):
    code = run(["enumerate", "--algebra", "square", "--budget", "3",
                "--emit", "json", "--out", str(tmp_path)])
    assert code == 3


def test_bad_algebra_exit_code(capsys):
    assert run(["enumerate", "--algebra", "no-such-algebra"]) == 1
    assert "error:" in capsys.readouterr().err


def test_verify_fixtures_ok(capsys):
    fixture = os.path.join(FIXTURE_DIR, "bipartite-region.json")
    assert run(["verify-fixtures", fixture]) == 0
    assert capsys.readouterr().out.startswith("ok ")


def test_verify_fixtures_mismatch(tmp_path, capsys):
    bad = os.path.join(tmp_path, "bad.json")
    with open(bad, "w") as fh:
        json.dump({"algebra": "square", "expect_count": 45}, fh)
    assert run(["verify-fixtures", bad]) == 2
    assert "FAIL" in capsys.readouterr().out


def test_certify_cli(capsys):
    assert run(["certify", "--name", "a5bi"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is True


def test_report_cli(capsys):
    assert run(["report", "--n", "2", "--r", "7", "--p", "5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["tau_tilting_finite"] is False


def test_aepsilon_cli(capsys):
    assert run(["aepsilon", "--algebra", "bs:2,4,2",
                "--epsilon", "-,-,-,+,+", "--emit", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] <= 19


def test_prime_field_scalar_mode(capsys):
    assert run(["enumerate", "--algebra", "square", "--scalar", "fp:5",
                "--emit", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["node_count"] == 46


def test_threads_flag_same_output(tmp_path):
    out1 = os.path.join(tmp_path, "t1")
    out2 = os.path.join(tmp_path, "t2")
    assert run(["enumerate", "--algebra", "square", "--emit", "json,csv",
                "--threads", "1", "--out", out1]) == 0
    assert run(["enumerate", "--algebra", "square", "--emit", "json,csv",
                "--threads", "4", "--out", out2]) == 0
    for name in ("enumerate.json", "enumerate.csv"):
        with open(os.path.join(out1, name)) as f1, \
                open(os.path.join(out2, name)) as f2:
            assert f1.read() == f2.read()
