import json
from pathlib import Path

import pytest

from goeritz import apply_word, canonical_form, from_json, to_json
from goeritz.cli import Config, load_config, run

BASE_JSON = Path(__file__).resolve().parents[1] / "base.json"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply_delta(capsys):
    code, out, _ = call(capsys, "apply", "d", str(BASE_JSON))
    assert code == 0
    assert from_json(out).base_intersection == 4


def test_path_of_base(capsys):
    code, out, _ = call(capsys, "path", str(BASE_JSON))
    assert code == 0 and json.loads(out) == {"word": ""}


def test_apply_path_apply(capsys, tmp_path):
    curve = tmp_path / "q.json"
    _, out, _ = call(capsys, "apply", "gdBd", str(BASE_JSON))
    curve.write_text(out)
    _, out, _ = call(capsys, "path", str(curve))
    _, again, _ = call(capsys, "apply", json.loads(out)["word"], str(BASE_JSON))
    assert canonical_form(from_json(again)) == canonical_form(from_json(curve.read_text()))


def test_relcheck(capsys):
    code, out, _ = call(capsys, "relcheck", "--samples", "100", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and report["summary"] == "6/6 relations hold on 100 samples"
    assert report["seed"] == 7


def test_reduce_and_validate(capsys, tmp_path):
    curve = tmp_path / "q.json"
    curve.write_text(json.dumps(to_json(apply_word("dbgd"))))
    code, out, _ = call(capsys, "reduce", str(curve))
    cert = json.loads(out)["certificate"]
    assert code == 0 and cert["p_dot_r"] == 4
    assert call(capsys, "validate", str(curve))[0] == 0
    assert call(capsys, "minimize", str(curve))[0] == 0


def test_factor(capsys, tmp_path):
    from goeritz import CurveImages

    images = tmp_path / "h.json"
    images.write_text(json.dumps(CurveImages.of_word("gd").to_json()))
    code, out, _ = call(capsys, "factor", str(images))
    assert code == 0
    assert CurveImages.of_word(json.loads(out)["word"]).key() == CurveImages.of_word("gd").key()


def test_ball_and_export(capsys, tmp_path):
    code, out, _ = call(capsys, "ball", "--radius", "1")
    assert code == 0 and json.loads(out)["vertices"] == 27
    code, out, _ = call(capsys, "export", "--radius", "0", "--format", "dot")
    assert code == 0 and "v_P" in out
    target = tmp_path / "ball.json"
    assert call(capsys, "export", "--radius", "1", "-o", str(target))[0] == 0
    assert json.loads(target.read_text())["vertex_count"] == 27


def test_domain_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"plus": {"families": []}}')
    code, _, err = call(capsys, "validate", str(bad))
    assert code == 1 and json.loads(err)["error"] == "InvalidDiagram"
    code, _, err = call(capsys, "reduce", str(BASE_JSON))
    assert code == 1 and json.loads(err)["error"] == "PreconditionError"
    code, _, err = call(capsys, "apply", "xyz", str(BASE_JSON))
    assert code == 1
    bad.write_text("{not json")
    assert call(capsys, "path", str(bad))[0] == 1


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "export", "--format", "svg")[0] == 2
    assert call(capsys)[0] == 2


def test_config(tmp_path, monkeypatch):
    assert load_config({}) == Config()
    path = tmp_path / "cfg.json"
    path.write_text('{"seed": 3, "n_range": 2}')
    assert load_config({"GOERITZ_CONFIG": str(path)}) == Config(seed=3, n_range=2)
    with pytest.raises(ValueError):
        Config(n_max=0)
    path.write_text('{"colour": 1}')
    with pytest.raises(ValueError):
        load_config({"GOERITZ_CONFIG": str(path)})
    monkeypatch.setenv("GOERITZ_CONFIG", str(path))
    assert run(["path", "x.json"]) == 1
