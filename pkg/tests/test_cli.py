import json

import pytest

from m4cyclic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_factor_table(capsys):
    code, out, _ = run(capsys, "factor", "--n", "5")
    assert code == 0
    for s in ("f1     x + 1", "f2     x + w^3", "f5     x + w^12"):
        assert s in out


def test_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "--n", "7", "--json")
    rep = json.loads(out)
    assert rep["factors"] == {"f1": "x + 1", "f2": "x^3 + x + 1", "f3": "x^3 + x^2 + 1"}
    assert rep["command"] == "m4cyclic factor --n 7 --json"


def test_even_n_is_usage_error(capsys):
    code, _, err = run(capsys, "factor", "--n", "4")
    assert code == 2 and "odd" in err


def test_build_one(capsys):
    code, out, _ = run(capsys, "build", "--n", "3", "--k", "2", "--gen", "1", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["params"] == [24, 24, 1] and rep["mds_gap"] == 0


def test_build_parse_error(capsys):
    code, _, err = run(capsys, "build", "--n", "3", "--k", "1", "--gen", "(w v + f_2")
    assert code == 2 and "position" in err


def test_build_needs_inputs(capsys):
    code, _, err = run(capsys, "build", "--n", "3")
    assert code == 2


def test_report_reproducible(capsys):
    argv = ["build", "--n", "7", "--k", "1", "--gen", "(w v^3+w^2v^2+w^3v)f_2", "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    ra, rb = json.loads(a), json.loads(b)
    ra.pop("seconds"), rb.pop("seconds")
    assert ra == rb
    assert ra["inputs"]["generators"] == ["(w v^3+w^2v^2+w^3v)f_2"]


def test_mindist_witness(capsys):
    code, out, _ = run(capsys, "mindist", "--n", "3", "--k", "1", "--gen", "v^3", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["distance"]["certificate"] in ("column-independence", "exhaustive")
    assert len(rep["distance"]["witness_support"]) == rep["distance"]["d"]


def test_dual_zero_profile(tmp_path, capsys):
    p = tmp_path / "zero.json"
    p.write_text(json.dumps({"n": 3, "k": 1, "classes": {}}))
    code, out, _ = run(capsys, "dual", "--profile", str(p), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["eta"] == 12 and rep["dims"]["dual"] == 12 and rep["violations"] == []


def test_dual_hermitian_n7_matches_euclidean(tmp_path, capsys):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"n": 7, "k": 1, "classes": {"1": [1], "2": [2], "4": [3]}}))
    _, e, _ = run(capsys, "dual", "--profile", str(p), "--json")
    _, h, _ = run(capsys, "dual", "--profile", str(p), "--json", "--hermitian")
    assert json.loads(e)["dual_generators"] == json.loads(h)["dual_generators"]


def test_dual_expression_is_image_level(capsys):
    code, out, _ = run(capsys, "dual", "--n", "3", "--k", "1", "--gen", "v", "--json")
    rep = json.loads(out)
    assert rep["image_level"] and rep["dims"]["code"] + rep["dims"]["dual"] == 12


def test_reproduce_lists_rows(capsys):
    code, out, _ = run(capsys, "reproduce", "--example", "1", "--json")
    rep = json.loads(out)
    assert [r["expected"] for r in rep["rows"]] == [[20, 14, 5], [20, 16, 3], [20, 15, 4], [20, 19, 2]]
    assert code == (0 if rep["matched"] == rep["total"] else 1)
    for r in rep["rows"]:
        assert r["distance"]["certificate"] == "column-independence"


def test_reproduce_tsv(capsys):
    code, out, _ = run(capsys, "reproduce", "--example", "4", "--tsv")
    lines = out.strip().splitlines()
    assert lines[0].split("\t")[0] == "example" and len(lines) == 6


def test_verify_iso(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "iso")
    assert code == 0 and out.count("PASS") == 2


@pytest.mark.parametrize("argv", [["bogus"], ["reproduce", "--example", "9"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2
