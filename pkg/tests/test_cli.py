from __future__ import annotations

import json

import pytest

from indcycles.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_and_count(tmp_path, capsys):
    prefix = tmp_path / "rf"
    code, _, _ = _run(capsys, "construct", "required-form", "--n", "19", "--out", str(prefix))
    assert code == 0
    names = json.loads((tmp_path / "rf.names.json").read_text())
    assert names["u1"] == 0
    assert (tmp_path / "rf.rot").exists() and (tmp_path / "rf.manifest.json").exists()
    code, out, _ = _run(capsys, "count", str(tmp_path / "rf.g6"), "--k", "5", "--through", "u1", "a1", "w",
                        "--names", str(tmp_path / "rf.names.json"))
    assert code == 0
    assert out.splitlines()[1] == "1,5,77,10,76,10"


def test_construct_families(capsys):
    for argv in (
        ["k2m", "--n", "6"],
        ["blowup", "--k", "3", "--n", "12"],
        ["blowup", "--odd", "--k", "2", "--n", "9", "--paths"],
        ["gadget", "--types", "3:4,2,1", "--masks", "1,-,-"],
        ["h-minus-z", "--sizes", "4", "4", "1"],
        ["case", "--types", "3:4,2,2", "--sizes", "3", "3", "3"],
    ):
        code, out, _ = _run(capsys, "construct", *argv)
        assert code == 0 and out.strip()


def test_construct_usage_errors(capsys):
    with pytest.raises(SystemExit):
        main(["construct", "k2m"])
    code, _, err = _run(capsys, "construct", "required-form", "--n", "12")
    assert code == 2 and "n >= 19" in err


def test_count_reports_bad_lines(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text("D~{\nnot-a-graph\nDhc\n")
    code, out, err = _run(capsys, "count", str(f), "--k", "3")
    assert code == 1
    assert "line 2" in err
    assert [row.split(",")[0] for row in out.splitlines()[1:]] == ["1", "3"]


def test_verify_exit_codes(tmp_path, capsys):
    code, out, _ = _run(capsys, "verify", "c4-extremal", "--csv", str(tmp_path / "t1.csv"))
    assert code == 0 and "PASS" in out
    assert (tmp_path / "t1.csv").read_text().startswith("suite,check")
    code, out, err = _run(capsys, "verify", "optional-edges")
    assert code == 1 and "FAILED suites: optional-edges" in err


def test_verify_formulas_csv(capsys):
    code, out, _ = _run(capsys, "verify-formulas", "--n-max", "22", "--format", "csv")
    assert code == 0 and out.startswith("suite,check,expected,computed,match")


def test_enumerate_search_and_replay(tmp_path, capsys):
    g6 = tmp_path / "p5.g6"
    code, _, _ = _run(capsys, "enumerate", "--n", "5", "--out", str(g6))
    assert code == 0 and len(g6.read_text().splitlines()) == 33
    manifest = json.loads((tmp_path / "p5.g6.manifest.json").read_text())
    assert manifest["subcommand"] == "enumerate" and str(g6) in manifest["outputs"]
    assert "timestamp" not in json.dumps(manifest)
    assert main(["replay", str(tmp_path / "p5.g6.manifest.json")]) == 0

    rec = tmp_path / "s.json"
    code, _, _ = _run(capsys, "search", "--n", "7", "--budget", "200", "--restarts", "2", "--seed", "4",
                      "--out", str(rec))
    assert code == 0
    first = rec.read_text()
    assert json.loads(first)["method"] == "annealing"
    assert main(["replay", str(tmp_path / "s.json.manifest.json")]) == 0
    assert rec.read_text() == first


def test_replay_detects_changes(tmp_path, capsys):
    out = tmp_path / "e.g6"
    main(["enumerate", "--n", "4", "--out", str(out)])
    m = tmp_path / "e.g6.manifest.json"
    data = json.loads(m.read_text())
    data["outputs"][str(out)] = "0" * 64
    m.write_text(json.dumps(data))
    assert main(["replay", str(m)]) == 1


def test_faces_and_dot(tmp_path, capsys):
    main(["construct", "k2m", "--n", "5", "--out", str(tmp_path / "k")])
    capsys.readouterr()
    code, out, _ = _run(capsys, "faces", str(tmp_path / "k.g6"), "--rotation", str(tmp_path / "k.rot"))
    assert code == 0 and "3 faces, spherical=True" in out
    code, out, _ = _run(capsys, "export-dot", str(tmp_path / "k.g6"), "--highlight", "s1",
                        "--names", str(tmp_path / "k.names.json"))
    assert code == 0 and 'label="s1"' in out and "fillcolor" in out
    code, _, err = _run(capsys, "faces", "D~{")
    assert code == 2 and "not planar" in err


def test_workers_env(monkeypatch):
    from indcycles.cli import build_parser

    monkeypatch.setenv("INDCYCLES_WORKERS", "3")
    assert build_parser().parse_args(["enumerate", "--n", "3"]).workers == 3
