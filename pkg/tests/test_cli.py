import json
from pathlib import Path

import pytest

from qpcluster.catalog import catalog_entry
from qpcluster.cli import main
from qpcluster.jsonio import seed_from_json, toric_to_json, word_from_json, word_to_json


def _write(path: Path, payload) -> Path:
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


@pytest.fixture
def toric_file(tmp_path):
    def make(label):
        return str(_write(tmp_path / f"{label}.json", toric_to_json(catalog_entry(label).vectors)))

    return make


def test_classify(toric_file, capsys):
    assert main(["classify", toric_file("E0(1)")]) == 0
    assert capsys.readouterr().out.strip() == "E0(1)"
    assert main(["classify", toric_file("E8(1)"), "--fan-extra-subdivision", "3"]) == 0
    assert capsys.readouterr().out.strip() == "E8(1)"
    assert main(["classify", toric_file("E3(1)"), "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["label"] == "E3(1)" and len(rep["gram"]) == len(rep["k_circ_basis"])


def test_nullroot(toric_file, capsys):
    assert main(["nullroot", toric_file("E7(1)")]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["delta"] == [1, 1, 1, 1, 3, 2, 2, 1, 1, 1]
    assert set(rep) >= {"fan", "H", "c_prime", "self_intersections", "multiplicities"}


def test_output_is_deterministic(toric_file, capsys):
    f = toric_file("E2(1)")
    main(["nullroot", f])
    first = capsys.readouterr().out
    main(["nullroot", f])
    assert capsys.readouterr().out == first


def test_polygon_round_trip(toric_file, tmp_path, capsys):
    assert main(["polygon", toric_file("E5(1)")]) == 0
    poly = json.loads(capsys.readouterr().out)
    assert poly["no_remainders"] is True
    pf = _write(tmp_path / "poly.json", {"vertices": poly["vertices"]})
    assert main(["seed-from-polygon", str(pf)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["vectors"]) == 8
    assert main(["polygon", str(pf), "--plot"]) == 0
    assert capsys.readouterr().out.splitlines() == ["* + *", "+ o +", "* + *"]


def test_seed_from_polygon_with_remainders(tmp_path, capsys):
    pf = _write(tmp_path / "bad.json", {"vertices": [[1, -3], [2, -3], [0, 1], [-1, 0]]})
    assert main(["seed-from-polygon", str(pf)]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "HasRemainders"


def test_mutate(tmp_path, capsys):
    seed = _write(tmp_path / "seed.json", {"labels": [1, 2], "lambda": [[0, 1], [-1, 0]]})
    word = _write(tmp_path / "word.json", [{"mut": {"k": 1, "sign": "+"}}])
    assert main(["mutate", str(seed), str(word)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exchange_matrix"] == [[0, -1], [1, 0]]
    assert out["basis"] == [[-1, 0], [0, 1]]
    bad = _write(tmp_path / "bad.json", [{"iso": {"perm": [2, 1], "sign": "+"}}])
    assert main(["mutate", str(seed), str(bad)]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "FormNotRespected"


def test_word_json_round_trip():
    e4 = catalog_entry("E4(1)")
    seed = e4.seed()
    w = e4.word("iota1", seed)
    text = json.loads(json.dumps(word_to_json(w)))
    assert word_from_json(seed, text).steps == w.steps
    assert seed_from_json({"labels": [1, 2], "lambda": [[0, "1"], ["-1", 0]]}).rank == 2


def test_verify(capsys):
    assert main(["verify", "E0(1)"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "pass"
    names = [c["check"] for c in rep["checks"]]
    assert names == sorted(names)
    assert main(["verify", "e1p", "--fast-path", "off", "--simplify-threshold", "-1"]) == 0


def test_usage_errors(tmp_path, capsys):
    assert main(["frobnicate"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "UsageError"
    assert main(["classify", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    assert main(["verify", "E9(1)"]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "UnknownLabel"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["nullroot", str(bad)]) == 2
    not_qp = _write(tmp_path / "p2.json", {"vectors": [[1, 0], [0, 1], [-1, -1]]})
    assert main(["classify", str(not_qp)]) == 1
    assert json.loads(capsys.readouterr().err.splitlines()[-1])["error"] == "NotQPainleveType"


def test_qp6_commands(tmp_path, capsys):
    assert main(["qp6", "identities"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "pass"
    params = _write(tmp_path / "p.json", {"t": ["2/3", "2", "1/3", "3/2", "3", "2"], "f": "2", "g": "3"})
    out = tmp_path / "traj.csv"
    assert main(["qp6", "orbit", "--steps", "6", "--params", str(params), "--out", str(out),
                 "--order", "c1-first"]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 8 and lines[2].split(",")[1] == "c1"
    summary = json.loads(capsys.readouterr().err)
    assert summary["max_relative_error"] <= 1e-9
    assert main(["qp6", "orbit", "--steps", "-1"]) == 2
