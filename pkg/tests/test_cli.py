import json
import subprocess
import sys

import pytest

from tdesigns import fixtures
from tdesigns.cli import main
from tdesigns.fileio import parse_spectrum_csv

ADMISSIBLE_8_150 = [8, 12, 20, 24, 32, 36, 44, 56, 60, 72, 80, 84, 92, 104, 116, 120, 132, 140, 144]


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    assert main(["gen-fixtures", "--output", str(d)]) == 0
    return d


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_fixtures_files(fixture_dir):
    assert sorted(p.name for p in fixture_dir.iterdir()) == ["fano-minus-one.design", "fano.design", "s5612.design"]
    assert (fixture_dir / "fano.design").read_text().startswith("7 3 7\n1 2 3\n")


def test_verify_exit_codes(capsys, fixture_dir, tmp_path):
    code, out, _ = run(capsys, "verify", "--design", str(fixture_dir / "fano.design"), "--t", "2", "--method", "all")
    verdict = json.loads(out)
    assert code == 0 and verdict["is_design"] and verdict["lambda"] == 1
    assert set(verdict["methods"].values()) == {True}

    code, out, _ = run(capsys, "verify", "--design", str(fixture_dir / "fano-minus-one.design"), "--t", "2")
    verdict = json.loads(out)
    assert code == 1 and verdict["witness"]["w"] == [1]

    bad = tmp_path / "garbage.design"
    bad.write_text("7 3 2\n1 2 3\n1 2 x\n")
    code, _, err = run(capsys, "verify", "--design", str(bad), "--t", "2")
    assert code == 2 and "line 3" in err

    code, _, _ = run(capsys, "verify", "--design", str(tmp_path / "missing"), "--t", "2")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--design", str(fixture_dir / "fano.design"), "--t", "4")
    assert code == 2


@pytest.mark.parametrize("method", ["spectral", "bruteforce", "johnson", "relative"])
def test_verify_each_method(capsys, fixture_dir, method):
    for name, t, want in (("fano", 2, 0), ("fano-minus-one", 2, 1), ("s5612", 5, 0)):
        code, _, _ = run(capsys, "verify", "--design", str(fixture_dir / f"{name}.design"), "--t", str(t),
                         "--method", method)
        assert code == want


def test_verify_disagreement_exit_code(capsys, fixture_dir, monkeypatch):
    from tdesigns import cli
    monkeypatch.setattr(cli, "relative_design_check", lambda D, t: False)
    code, out, _ = run(capsys, "verify", "--design", str(fixture_dir / "fano.design"), "--t", "2", "--method", "all")
    assert code == 3 and json.loads(out)["disagreement"]["relative"] is False


def test_fixture_failure_exit_code(capsys, monkeypatch):
    _, t, expected = fixtures._BUILDERS["fano"]
    monkeypatch.setitem(fixtures._BUILDERS, "fano", (fixtures.fano_minus_one, t, expected))
    code, _, err = run(capsys, "verify", "--fixture", "fano", "--t", "2")
    assert code == 4 and "fixture" in err


def test_spectrum_s5612(capsys, fixture_dir):
    code, out, _ = run(capsys, "spectrum", "--design", str(fixture_dir / "s5612.design"))
    assert code == 0
    spec = parse_spectrum_csv(out)
    assert spec[6] == {-12: 792, 52: 132}
    assert out.splitlines()[:3] == ["weight,value,multiplicity", "0,132,1", "1,0,12"]
    code, out, _ = run(capsys, "spectrum", "--design", str(fixture_dir / "s5612.design"), "--weights", "2")
    assert out.splitlines() == ["weight,value,multiplicity", "0,132,1", "1,0,12", "2,-12,66"]
    code, out, _ = run(capsys, "spectrum", "--fixture", "fano", "--format", "json")
    assert json.loads(out)[0] == {"weight": 0, "value": 7, "multiplicity": 1}


def test_anf_output(capsys):
    code, out, _ = run(capsys, "anf", "--fixture", "fano")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x_1*x_2*x_3"
    assert json.loads(lines[-1]) == {"degree_histogram": {"3": 7, "4": 28, "7": 1}}
    code, out, _ = run(capsys, "anf", "--fixture", "fano", "--format", "json")
    assert len(json.loads(out)["terms"]) == 36


def test_krawtchouk_csv(capsys):
    code, out, _ = run(capsys, "krawtchouk", "7", "--k", "3")
    assert out.splitlines()[:4] == ["k,x,value", "3,0,35", "3,1,5", "3,2,-5"]
    code, out, _ = run(capsys, "krawtchouk", "1")
    assert out.splitlines()[1:] == ["0,0,1", "0,1,1", "1,0,1", "1,1,-1"]
    code, _, _ = run(capsys, "krawtchouk", "3", "--x", "9")
    assert code == 2


def test_admissible_json_lines(capsys):
    code, out, _ = run(capsys, "admissible", "8", "150")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["n"] for r in rows] == list(range(8, 151, 2))
    assert [r["n"] for r in rows if not r["failed"]] == ADMISSIBLE_8_150
    code, out2, _ = run(capsys, "admissible", "--min", "8", "--max", "150")
    assert out2 == out
    code, _, _ = run(capsys, "admissible")
    assert code == 2


def test_code_csv(capsys, fixture_dir, tmp_path):
    target = tmp_path / "code.csv"
    code, out, _ = run(capsys, "code", "--design", str(fixture_dir / "s5612.design"), "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "weight,count\n0,1\n132,1\n2036,924\n2048,6143\n2052,990\n2100,132\n2180,1\n"


def test_oa_command(capsys, tmp_path):
    arr = tmp_path / "even.txt"
    arr.write_text("3 0 4\n-\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "oa", "--design", str(arr), "--rows-as-vectors")
    rep = json.loads(out)
    assert code == 0 and rep["strength"] == 2 and rep["outer_distribution"] == [1, 0, 0, 1]
    code, _, err = run(capsys, "oa", "--design", str(arr))
    assert code == 2 and "line 1" in err


def test_module_entry_point(fixture_dir):
    proc = subprocess.run([sys.executable, "-m", "tdesigns", "verify", "--design", str(fixture_dir / "fano.design"),
                           "--t", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["params"] == "2-(7,3,1)"
