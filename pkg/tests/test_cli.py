import json

import pytest

from pclie import cli
from pclie.battery import a2_rank3, rank_deficient
from pclie.embed import sl2_data, sl2_pentad
from pclie.reports import Report


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, p in {"sl2": sl2_pentad(3), "a2": a2_rank3(), "rd": rank_deficient()}.items():
        path = tmp_path / f"{name}.json"
        path.write_text(p.to_json())
        paths[name] = str(path)
    (tmp_path / "aff.json").write_text(json.dumps({"C": [[2, -2], [-2, 2]]}))
    paths["aff"] = str(tmp_path / "aff.json")
    (tmp_path / "red.json").write_text(json.dumps(sl2_data(2).to_dict()))
    paths["red"] = str(tmp_path / "red.json")
    (tmp_path / "broken.json").write_text('{"r": 1,\n "n": }')
    paths["broken"] = str(tmp_path / "broken.json")
    (tmp_path / "singular.json").write_text(
        json.dumps({"r": 1, "n": 1, "A": [["0"]], "D": [["1"]], "gamma": ["1"]}))
    paths["singular"] = str(tmp_path / "singular.json")
    return paths


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze(files, capsys):
    code, out, _ = run(capsys, "analyze", files["sl2"])
    assert code == 0
    assert "C = [[2, -3], [-3, 9/2]]" in out
    assert "(U0', z, Delta) = (1, 0, 0)" in out
    code, out, _ = run(capsys, "analyze", files["rd"], "--json")
    d = json.loads(out)
    assert d["structure"]["basis_z"] == [["0", "1"]]


def test_construct_a2(files, capsys):
    code, out, _ = run(capsys, "construct", files["a2"], "--max-degree", "5",
                       "--dims-only", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["degrees"] == list(range(-5, 6))
    assert d["dims"] == [0, 0, 0, 1, 2, 3, 2, 1, 0, 0, 0]
    assert d["degree0"] == {"U0prime": 2, "z": 0, "Delta": 1}
    assert "structure_constants" not in d


def test_construct_text_and_constants(files, capsys):
    code, out, _ = run(capsys, "construct", files["sl2"], "--max-degree", "2")
    assert code == 0 and "total dimension" in out
    code, out, _ = run(capsys, "construct", files["sl2"], "--max-degree", "2", "--json")
    assert json.loads(out)["structure_constants"]


def test_verify_passes_and_is_deterministic(files, capsys):
    args = ("verify", files["a2"], "--max-degree", "3", "--json")
    code, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert code == 0 and out1 == out2
    assert json.loads(out1)["passed"] is True


def test_verify_single_check_and_gamma2(files, capsys):
    code, out, _ = run(capsys, "verify", files["sl2"], "--gamma-invariance",
                       "--gamma2", "1,7")
    assert code == 0 and "gamma_invariance" in out and "ALL PASS" in out
    code, _, err = run(capsys, "verify", files["sl2"], "--gamma-invariance",
                       "--gamma2", "1,0")
    assert code == 2 and "gamma2" in err


def test_verify_failure_exit_code(files, capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_transitivity",
                        lambda G: Report("transitivity", False, "forced"))
    code, out, _ = run(capsys, "verify", files["sl2"], "--transitivity")
    assert code == 1 and "VERIFICATION FAILED" in out


def test_contragredient(files, capsys):
    code, out, _ = run(capsys, "contragredient", files["aff"], "--max-degree", "2",
                       "--reduced", "--json")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 2, 1, 2, 1]
    code, out, _ = run(capsys, "contragredient", files["aff"], "--max-degree", "2")
    assert "total dimension 8" in out


def test_embed(files, capsys):
    code, out, _ = run(capsys, "embed", "sl2", "--m", "2")
    assert code == 0 and json.loads(out)["D"] == [["2", "-2"]]
    code, out, _ = run(capsys, "embed", "custom", files["red"])
    assert code == 0 and json.loads(out)["A"] == [["1/8"]]
    code, _, err = run(capsys, "embed", "sl2")
    assert code == 2 and err.startswith("error:")


def test_oracle(files, capsys):
    code, out, _ = run(capsys, "oracle", files["aff"], "--max-degree", "3", "--json")
    assert code == 0 and json.loads(out)["dims"] == [2, 1, 2, 2, 2, 1, 2]
    code, _, err = run(capsys, "oracle", files["sl2"], "--max-degree", "6")
    assert code == 2 and "error" in err


def test_input_errors(files, capsys):
    code, _, err = run(capsys, "analyze", files["broken"])
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "verify", files["singular"])
    assert code == 2 and "A singular" in err
    code, _, err = run(capsys, "analyze", "/nonexistent/file.json")
    assert code == 2


def test_bad_max_degree(files):
    with pytest.raises(SystemExit) as exc:
        cli.main(["construct", files["sl2"], "--max-degree", "0"])
    assert exc.value.code == 2
