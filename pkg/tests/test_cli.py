import json

import pytest

from bihom.cli import main


@pytest.fixture
def a_json(tmp_path):
    path = tmp_path / "a.json"
    assert main(["example", "ex1", "--param", "lambda=1", "-o", str(path)]) == 0
    return path


def test_classify_ex1_fails(a_json, capsys):
    assert main(["classify", str(a_json)]) == 1
    out = capsys.readouterr().out
    assert "I2" in out and "witness=(0, 1, 1)" in out


def test_construct_then_classify_and_audit(a_json, tmp_path, capsys):
    k = tmp_path / "k.json"
    assert main(["construct", "associated-akivis", str(a_json), "-o", str(k)]) == 0
    assert main(["classify", str(k), "--identities", "I9,I20"]) == 0
    assert main(["audit", str(k), "--format", "json"]) == 0
    capsys.readouterr()
    main(["audit", str(k), "--format", "json"])
    assert json.loads(capsys.readouterr().out)["violations"] == []


def test_json_classify(a_json, capsys):
    main(["classify", str(a_json), "--identities", "I2", "--format", "json"])
    d = json.loads(capsys.readouterr().out)
    assert d["reports"][0]["residual"] == ["4", "0"]


def test_twist_paths(tmp_path):
    ak, r, s, out = (tmp_path / n for n in ("ak.json", "r.json", "s.json", "t.json"))
    main(["example", "akivis2d", "-o", str(ak)])
    main(["example", "r-map", "--param", "r=1", "-o", str(r)])
    main(["example", "s-map", "--param", "s=2", "-o", str(s)])
    assert main(["twist", str(ak), "--alpha", str(r), "--beta", str(s), "-o", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["kind"] == "bihom-akivis-algebra"
    assert {"i": 0, "j": 1, "k": 1, "coeffs": {"0": "18"}} in d["triple"]
    assert main(["validate", str(out)]) == 0
    t2 = tmp_path / "t2.json"
    assert main(["twist-akivis", str(out), "--phi", str(r), "--psi", str(s), "-o", str(t2)]) == 0
    assert main(["classify", str(t2), "--identities", "I9"]) == 0


def test_twist_bihom_algebra(tmp_path):
    c, rot, rinv, out = (tmp_path / n for n in ("c.json", "r.json", "ri.json", "o.json"))
    main(["example", "cross3", "-o", str(c)])
    main(["example", "rot-z", "-o", str(rot)])
    d = json.loads(rot.read_text())
    d["matrix"] = [list(col) for col in zip(*d["matrix"])]
    rinv.write_text(json.dumps(d))
    assert main(["twist", str(c), "--alpha", str(rot), "--beta", str(rinv), "-o", str(out)]) == 0
    assert main(["classify", str(out), "--identities", "I6,I7,I8"]) == 0


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["classify"], ["classify", "x.json", "--nope"], ["example", "nonexistent"],
     ["example", "ex1", "--param", "lambda"], ["example", "ex1", "--param", "lambda=-1"],
     ["classify", "/nonexistent/file.json"]],
)
def test_input_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_wrong_file_kind(a_json, tmp_path):
    out = tmp_path / "o.json"
    assert main(["twist", str(a_json), "--alpha", str(a_json), "--beta", str(a_json), "-o", str(out)]) == 2


def test_empty_file(tmp_path):
    p = tmp_path / "e.json"
    p.write_text("")
    assert main(["validate", str(p)]) == 2


def test_example_list(capsys):
    assert main(["example", "--list"]) == 0
    assert "octonions-bihom" in capsys.readouterr().out


def test_repeatable_output(a_json, capsys):
    main(["classify", str(a_json), "--format", "json"])
    first = capsys.readouterr().out
    main(["classify", str(a_json), "--format", "json"])
    assert capsys.readouterr().out == first
