import json
import subprocess
import sys

import pytest

from schurweyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rsk_text(capsys):
    assert run(capsys, "rsk", "--word", "2,1,2") == (0, "1,2/2 1,3/2\n", "")


def test_rsk_empty(capsys):
    assert run(capsys, "rsk", "--word", "")[1] == "∅ ∅\n"


def test_rsk_variants(capsys):
    assert run(capsys, "rsk", "--word", "2,1", "--variant", "star")[1] == "1/2 1/2\n"
    code, out, _ = run(capsys, "rsk", "--word", "1,2*,1*", "--variant", "mixed")
    assert code == 0 and len(out.split()) == 2


def test_rsk_formats(capsys):
    _, out, _ = run(capsys, "--format", "json", "rsk", "--word", "2,1,2")
    assert json.loads(out)["p"] == "1,2/2"
    _, out, _ = run(capsys, "rsk", "--word", "2,1,2", "--format", "csv")
    assert out == 'p,q\n"1,2/2","1,3/2"\n'


def test_rsk_bad_word(capsys):
    code, out, err = run(capsys, "rsk", "--word", "1,x")
    assert code == 2 and out == "" and "cannot parse" in err


def test_rsk_starred_in_row_variant(capsys):
    code, _, err = run(capsys, "rsk", "--word", "1*")
    assert code == 2 and err


def test_graph_depth0(capsys):
    code, out, _ = run(capsys, "graph", "--k", "2", "--depth", "0")
    assert code == 0 and out == "# k=2 l=0 depth=0\nV 0 0 ∅\n"


def test_graph_out_file(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.json"
    assert run(capsys, "graph", "--k", "2", "--l", "1", "--depth", "3", "--out", str(a))[0] == 0
    first = a.read_text()
    run(capsys, "graph", "--k", "2", "--l", "1", "--depth", "3", "--out", str(a))
    assert a.read_text() == first
    run(capsys, "--format", "json", "graph", "--k", "2", "--depth", "2", "--out", str(b))
    assert json.loads(b.read_text())["depth"] == 2


def test_graph_bad_depth(capsys):
    assert run(capsys, "graph", "--k", "2", "--depth", "-1")[0] == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "dims")
    assert code == 0 and "dims" in out and "PASS" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from schurweyl import suites

    def broken():
        res = suites.SuiteResult("broken")
        res.check(False, "w=()", 1, 2)
        return res

    monkeypatch.setattr(suites, "run_suite", lambda name: [broken()])
    code, out, _ = run(capsys, "verify", "dims")
    assert code == 1 and "counterexample: w=()" in out


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense"])
    assert info.value.code == 2


def test_experiment_quick(capsys, tmp_path):
    code, out, _ = run(capsys, "experiment", "--preset", "quick", "--out", str(tmp_path))
    assert code == 0 and out.splitlines()[-1].startswith("PASS")
    first = (tmp_path / "quick.json").read_text()
    assert (tmp_path / "quick.csv").is_file() and (tmp_path / "quick.words.npz").is_file()
    run(capsys, "experiment", "--preset", "quick", "--out", str(tmp_path), "--resume")
    assert (tmp_path / "quick.json").read_text() == first


def test_experiment_seed_override(capsys, tmp_path):
    run(capsys, "experiment", "--preset", "quick", "--out", str(tmp_path), "--seed-override", "7")
    doc = json.loads((tmp_path / "quick.json").read_text())
    assert [s["seed"] for s in doc["seeds"]] == [7]
    assert run(capsys, "experiment", "--preset", "quick", "--out", str(tmp_path), "--seed-override", "a")[0] == 2


def test_experiment_list_presets(capsys):
    code, out, _ = run(capsys, "experiment", "--list-presets")
    assert code == 0 and "quick" in out.split()


def test_experiment_malformed_config(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"k": 0, "n": 10, "m": 1, "seeds": [0], "p": [1.0], "extra": True}))
    code, _, err = run(capsys, "experiment", str(path), "--out", str(tmp_path))
    assert code == 2 and "k: must be >= 1" in err and "extra: unknown field" in err


def test_experiment_needs_config(capsys):
    assert run(capsys, "experiment")[0] == 2


def test_resume_without_log(capsys, tmp_path):
    code, _, err = run(capsys, "experiment", "--preset", "quick", "--out", str(tmp_path), "--resume")
    assert code == 2 and "no word log" in err


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "schurweyl.cli", "rsk", "--word", "1,1,2"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "1,1,2 1,2,3\n"
