import csv
import io
import json

import numpy as np
import pytest

from schurweyl import experiment as X

BASE = {"k": 2, "l": 0, "p": [0.6, 0.4], "n": 400, "m": 2, "seeds": [0, 1], "log_every": 100}


def cfg(**kw):
    return X.parse_config({**BASE, **kw}, "t")


def test_parse_ok():
    c = cfg()
    assert c.p == ["3/5", "2/5"] and c.q == [] and c.mode == "pure"
    assert c.tolerance == 0.02 and c.density_tolerance == 0.015


def test_all_problems_reported_together():
    with pytest.raises(X.ConfigError) as info:
        X.parse_config({"k": "2", "n": -1, "m": 9, "seeds": [], "colour": 1})
    msgs = info.value.problems
    assert any(m.startswith("colour:") for m in msgs)
    assert any(m.startswith("k:") for m in msgs)
    assert any(m.startswith("n:") for m in msgs)
    assert any(m.startswith("m:") for m in msgs)
    assert any(m.startswith("seeds:") for m in msgs)
    assert any(m.startswith("p:") for m in msgs)


@pytest.mark.parametrize("patch,field", [
    ({"p": [0.6, 0.5]}, "p/q"),
    ({"mode": "mixed"}, "l"),
    ({"l": 1, "q": [0.1]}, "l"),
    ({"mode": "sideways"}, "mode"),
    ({"m": 500, "n": 3}, "m"),
])
def test_field_errors(patch, field):
    with pytest.raises(X.ConfigError) as info:
        cfg(**patch)
    assert any(m.startswith(field + ":") for m in info.value.problems)


def test_not_an_object():
    with pytest.raises(X.ConfigError):
        X.parse_config([1, 2])


def test_uniform_default_p():
    c = X.parse_config({"k": 3, "n": 10, "m": 1, "seeds": [0], "mode": "uniform"})
    assert c.p == ["1/3"] * 3


def test_load_config_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{k: 2")
    with pytest.raises(X.ConfigError):
        X.load_config(path)


def test_presets_parse():
    names = X.presets()
    assert {"quick", "thoma-k2", "uniform-k2", "density-k3", "mixed-k2l2", "thoma-mixed-k2l2"} <= set(names)
    for name in names:
        c = X.load_preset(name)
        assert c.name == name
    with pytest.raises(X.ConfigError):
        X.load_preset("nope")


def test_run_outputs():
    res = X.run(cfg())
    assert [s.seed for s in res.seeds] == [0, 1]
    assert all(sum(s.shape_rows) == 400 for s in res.seeds)
    assert [t["step"] for t in res.seeds[0].trajectory] == [100, 200, 300, 400]
    rows = list(csv.DictReader(io.StringIO(res.to_csv())))
    assert tuple(rows[0]) == X.CSV_FIELDS
    kinds = {r["kind"] for r in rows}
    assert "shape" in kinds
    doc = json.loads(res.to_json())
    assert doc["metadata"]["rng"]
    assert doc["summary"]["passed"] == res.passed
    # per-seed estimates at each m total one
    for s in res.seeds:
        for rep in s.reports:
            assert rep.total() == 1


def test_run_deterministic_and_parallel():
    a, b = X.run(cfg()), X.run(cfg(), jobs=2)
    assert a.to_json() == b.to_json() and a.to_csv() == b.to_csv()


def test_save_and_resume(tmp_path):
    res = X.run(cfg())
    paths = X.save(res, tmp_path)
    words = X.load_words(paths["words"])
    assert set(words) == {0, 1}
    assert all(np.array_equal(words[s], res.words[s]) for s in words)
    again = X.run(cfg(), words=words)
    assert again.to_json() == paths["json"].read_text()


def test_resume_ignores_short_words():
    short = {0: np.ones(10, dtype=np.int64)}
    assert X.run(cfg(), words=short).to_json() == X.run(cfg()).to_json()


def test_mixed_run():
    c = X.parse_config({"k": 1, "l": 1, "p": [0.6], "q": [0.4], "n": 300, "m": 2, "seeds": [0],
                        "mode": "mixed"}, "mx")
    res = X.run(c)
    assert len(res.seeds[0].shape_cols) == 1
    assert json.loads(res.to_json())["metadata"]["thoma"]["beta"] == ["2/5"]


def test_default_out_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(X.OUT_ENV, str(tmp_path))
    assert X.default_out_dir() == tmp_path
