from __future__ import annotations

import json

import pytest

from crcodes import cli
from crcodes import codecore as cc
from crcodes.fieldkit import field

from conftest import build_nordstrom_robinson


def run(argv):
    return cli.main(argv)


def test_atlas_build_writes_code_and_report(tmp_path, capsys):
    out = tmp_path / "golay.json"
    report = tmp_path / "report.json"
    rc = run(["atlas", "build", "S.1", "-o", str(out), "--report", str(report), "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["match"] is True
    assert doc["computed_ia"]["brace"] == "{23,22,21; 1,2,3}"
    saved = json.loads(out.read_text())
    assert saved["n"] == 23 and saved["kind"] == "linear"
    cls = json.loads(report.read_text())
    assert cls["flags"]["completely_regular"] is True


def test_atlas_build_unknown_id():
    assert run(["atlas", "build", "X.1"]) == 2


def test_atlas_build_infeasible_params():
    assert run(["atlas", "build", "F.20", "--m", "5"]) == 3


def test_atlas_list_json(capsys):
    rc = run(["atlas", "list", "--rho", "3", "--q", "2", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    ids = {e["id"] for e in doc["entries"]}
    assert {"F.7", "F.16", "F.20", "S.1", "S.22"} <= ids


def test_atlas_regress_subset(capsys):
    rc = run(["atlas", "regress", "S.1", "S.10", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert [r["id"] for r in doc["results"]] == ["S.1", "S.10"]
    assert all("seconds" not in r for r in doc["results"])


def test_atlas_regress_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["atlas", "regress", "S.1", "F.1", "--json", "--out", str(out1)]) == 0
    assert run(["atlas", "regress", "S.1", "F.1", "--json", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_atlas_manifest(tmp_path, capsys):
    out = tmp_path / "atlas.json"
    assert run(["atlas", "manifest", "-o", str(out)]) == 0
    capsys.readouterr()
    assert json.loads(out.read_text())["entries"]


def test_verify_cr(tmp_path, capsys):
    path = tmp_path / "golay.json"
    cc.save_code(cc.binary_golay(), path)
    rc = run(["verify", str(path), "--cr", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["completely_regular"] is True
    assert doc["ia"]["b"] == [23, 22, 21]


def test_verify_classify_negative_control(tmp_path, capsys):
    from crcodes.atlas import CONTROLS
    code = CONTROLS["N.1"].builder()
    path = tmp_path / "thm59.json"
    cc.save_code(code, path)
    rc = run(["verify", str(path), "--classify", "--json"])
    assert rc == 0  # classification is informational
    doc = json.loads(capsys.readouterr().out)
    flags = doc["classification"]["flags"]
    assert flags["up_wide"] is True and flags["completely_regular"] is False


def test_verify_cr_failure_exit(tmp_path, capsys):
    from crcodes.atlas import CONTROLS
    code = CONTROLS["N.1"].builder()
    path = tmp_path / "thm59.json"
    cc.save_code(code, path)
    assert run(["verify", str(path), "--cr", "--json"]) == 1


def test_verify_designs(tmp_path, capsys):
    path = tmp_path / "golay.json"
    cc.save_code(cc.binary_golay(), path)
    rc = run(["verify", str(path), "--designs", "--weight", "7", "--strength", "4", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["design"]["lambda"] == 1
    rc = run(["verify", str(path), "--designs", "--weight", "7", "--strength", "5", "--json"])
    assert rc == 1


def test_verify_lloyd_and_graph(tmp_path, capsys):
    path = tmp_path / "ham.json"
    H = [[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]
    cc.save_code(cc.Code.from_parity_check(field(2), H), path)
    gout = tmp_path / "graph.dot"
    rc = run(["verify", str(path), "--cr", "--lloyd", "--graph",
              "--graph-out", str(gout), "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["lloyd"]["passed"] is True
    assert doc["graph"]["matches_code_ia"] is True
    assert gout.read_text().startswith("graph coset {")


def test_verify_malformed_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{broken")
    assert run(["verify", str(path), "--cr"]) == 2


def test_verify_guard_exit(tmp_path):
    path = tmp_path / "golay.json"
    cc.save_code(cc.binary_golay(), path)
    assert run(["verify", str(path), "--cr", "--max-syndromes", "16"]) == 3


def test_bounds_rho1(capsys):
    assert run(["bounds", "--rho1", "9", "7", "12", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert run(["bounds", "--rho1", "9", "0", "12", "--json"]) == 1
    capsys.readouterr()


def test_bounds_lloyd_roots(capsys):
    rc = run(["bounds", "--lloyd-roots", "31", "2", "1", "1", "1/5", "1/5", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["roots"] == [12, 16, 20]
    assert run(["bounds", "--lloyd-roots", "6", "2", "1", "1", "--json"]) == 1
    capsys.readouterr()


def test_bounds_malformed_rational(capsys):
    assert run(["bounds", "--lloyd-roots", "31", "2", "1/x"]) == 2


def test_external_entry_via_cli(tmp_path, capsys):
    nr15, _ = build_nordstrom_robinson()
    path = tmp_path / "nr15.json"
    cc.save_code(nr15, path)
    rc = run(["atlas", "build", "F.18", "--m", "2", "--file", str(path), "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["match"] is True
    # without a file the entry is unusable input
    assert run(["atlas", "build", "F.18", "--m", "2"]) == 2
