from __future__ import annotations

import json

import pytest

from heisrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_heis_mul(capsys):
    code, out, _ = run(capsys, "heis", "mul", "a1 b1", "a1")
    assert code == 0 and out == "a1^2 b1 s^-2"


def test_heis_inverse_and_reduce(capsys):
    assert run(capsys, "heis", "inv", "a1 b1 s")[1] == "a1^-1 b1^-1 s^-3"
    assert run(capsys, "heis", "reduce", "a1 s^9", "--mod-sigma", "4")[1] == "a1 s"


def test_global_options_before_subcommand(capsys):
    code, out, _ = run(capsys, "--genus", "2", "--json", "heis", "mul", "a2", "b2")
    assert code == 0 and json.loads(out)["element"] == {"m": [0, 1], "n": [0, 1], "l": 0}


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "heis", "mul", "a1 z2")
    assert code == 2 and "position 3" in err


def test_pair_empty_fixture(capsys):
    assert run(capsys, "pair", "--file", "empty.json") == (0, "0", "")


def test_pair_npoint_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"type": "n_point", "n_j": [0, 2], "A": [[0, 0], [0, 0]]}))
    code, out, _ = run(capsys, "pair", "--file", str(path), "--mod-sigma", "4", "--n", "3")
    assert code == 0 and out == "0"


def test_rep_act(capsys):
    code, out, _ = run(capsys, "rep", "act", "--catalog", "kernel_pair_k2.json",
                       "--word", "Ta Tb Ta^-1 Tb^-1", "--mod-sigma", "4", "--expect-identity")
    assert code == 0 and out.endswith("identity on basis: True")
    code, _, _ = run(capsys, "rep", "act", "--catalog", "kernel_pair_k2.json", "--word", "Ta", "--expect-identity")
    assert code == 1


def test_linearize(capsys):
    code, out, _ = run(capsys, "linearize", "iota", "s", "--r", "2", "--certificate")
    assert code == 0 and out.endswith("certificate: N=2 k=1")
    code, out, _ = run(capsys, "--json", "linearize", "taut", "a1 b1 s")
    assert json.loads(out)["matrix"][0] == [1, 1, "3/2"]


def test_burau(capsys):
    code, out, _ = run(capsys, "--json", "burau", "--k", "4", "--word", "s1 s2 S1", "--reduced")
    assert code == 0 and len(json.loads(out)["matrix"]) == 3


def test_bridge(capsys):
    code, out, _ = run(capsys, "bridge", "check", "--region", "S", "--n", "3")
    assert code == 0 and out.endswith("pass")


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--max-k", "1", "--bound", "2")
    assert code == 0 and out == "no kernel diagrams found"
    code, _, err = run(capsys, "search", "--max-k", "12", "--bound", "20")
    assert code == 1 and "exceeds" in err


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "--json", "verify", "--suite", "paper", "--only", "separating-curves", "augmentation")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert [c["id"] for c in report["checks"]] == ["separating-curves", "augmentation"]


def test_missing_file(capsys):
    with pytest.raises(SystemExit):
        main(["pair", "--file", "does-not-exist.json"])
