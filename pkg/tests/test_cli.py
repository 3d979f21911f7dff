from __future__ import annotations

import json

import pytest

from zpairs.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for key, args in {"c11": ["C", "1", "1"], "c1m1": ["C", "1", "-1"], "quad": ["Quadrilateral"],
                      "pappus": ["Pappus"]}.items():
        path = tmp_path / f"{key}.json"
        assert main(["catalog", "emit", *args, "-o", str(path)]) == 0
        out[key] = str(path)
    return out


def _json(capsys, argv):
    capsys.readouterr()
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)["result"]


def test_pair(files, capsys):
    assert main(["pair", files["c11"], files["c1m1"]]) == 0
    assert capsys.readouterr().out.startswith("ZARISKI PAIR")
    code, r = _json(capsys, ["pair", files["c11"], files["c11"]])
    assert code == 0 and r["verdict"] == "INDISTINGUISHABLE BY τ"


def test_weight_prints_four_sums(files, capsys):
    code, r = _json(capsys, ["weight", files["c11"]])
    assert code == 0 and r["tau"] == 0 and r["chamber_sums"] == [0, 0, 0, 0]


def test_moduli(capsys):
    code, r = _json(capsys, ["moduli", "--k1", "3", "--k2", "-3"])
    assert code == 0 and r["accepted"] and r["component"] == "Sigma1"
    assert list(r["characterizations"].values()) == [False, False, False]
    code, r = _json(capsys, ["moduli", "--k1=-1/2", "--k2=-1/2"])
    assert code == 0 and not r["accepted"]


def test_other_commands(files, capsys, tmp_path):
    for cmd in ("validate", "comb", "aut", "stable", "dual", "invariant", "depth", "classify"):
        assert main([cmd, files["quad"]]) == 0, cmd
    code, r = _json(capsys, ["aut", files["pappus"]])
    assert r["order"] == 108
    code, r = _json(capsys, ["stable", files["pappus"]])
    assert r["stable"] is False
    svg = tmp_path / "q.svg"
    assert main(["plot", files["quad"], "--chart", "line:1,1,1", "-o", str(svg)]) == 0
    assert svg.read_text().count("stroke-dasharray") == 3
    assert main(["catalog", "list"]) == 0


def test_exit_codes(files, tmp_path, capsys):
    assert main(["bogus"]) == 2
    assert main(["moduli", "--k1", "3"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": {"type": "rational"}, "m": 2')
    assert main(["validate", str(bad)]) == 1
    assert "line 1 column" in capsys.readouterr().err
    obj = json.loads(open(files["quad"]).read())
    obj["surrounding"][0]["plumbing"] = 0
    bad.write_text(json.dumps(obj))
    assert main(["validate", str(bad)]) == 1
    assert main(["weight", str(bad)]) == 1
    assert main(["plot", files["c11"], "--chart", "line-index:1", "-o", str(tmp_path / "x.svg")]) == 1
