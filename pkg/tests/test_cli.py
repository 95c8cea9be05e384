"""Command-line behaviour and exit codes."""

import json

import pytest

from lieforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim(capsys):
    assert run(capsys, "dim", "A2", "1", "1")[:2] == (0, "8\n")
    assert run(capsys, "dim", "D4", "0,0,0,1")[:2] == (0, "8\n")


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "A1", "2")
    assert code == 0
    assert out.strip() == "rank=1: (-2)x1 (0)x1 (2)x1"


def test_tensor_json(capsys):
    code, out, _ = run(capsys, "tensor", "A2", "1,0", "0,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert sorted(map(tuple, (tuple(w) for w, _ in data["decomposition"]))) == [(0, 0), (1, 1)]


def test_tensor_text(capsys):
    code, out, _ = run(capsys, "tensor", "A1", "1", "1")
    assert code == 0
    assert "(dim 3)" in out and "(dim 1)" in out


def test_decompose(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "A1", "rank=1: (2) (0)x2 (-2)")
    assert code == 0
    assert "1 x [2] (dim 3)" in out and "1 x [0] (dim 1)" in out
    f = tmp_path / "w.txt"
    f.write_text("rank=1: (1) (-1)")
    assert run(capsys, "decompose", "A1", str(f))[0] == 0
    assert run(capsys, "decompose", "A1", "rank=1: (2)")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "8")
    assert code == 0
    assert len(out.strip().splitlines()) == 11
    code, out, _ = run(capsys, "enumerate", "--dim", "7", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert {r["label"] for r in rows} == {"7A1", "7G2", "7B3", "7A6"}
    assert run(capsys, "enumerate", "--dim", "9")[0] == 2
    assert run(capsys, "enumerate", "--dim", "5", "--simple")[0] == 0


def test_character_eq(capsys):
    a = "rank=1: (-6) (-4) (-2) (0) (2) (4) (6)"
    b = "rank=1: (-3) (-2) (-1) (0) (1) (2) (3)"
    code, out, _ = run(capsys, "character-eq", a, b, "-v")
    assert code == 0 and out.startswith("equivalent")
    code, out, _ = run(capsys, "character-eq", a, "rank=1: (1) (-1)")
    assert code == 1 and out.startswith("not equivalent")


def test_rectangular(capsys):
    code, out, _ = run(capsys, "rectangular", "rank=2: (1,0) (-1,0) (0,1) (0,-1)", "--json")
    assert code == 0
    info = json.loads(out)
    assert info["lengths"] == [2, 2] and info["hypercubic"]
    code, out, _ = run(capsys, "rectangular", "rank=1: (1) (1) (-1) (-1)")
    assert code == 1 and "not rectangular" in out


def test_verify_targets(capsys):
    for target in ["table2", "chromium", "sign-perm"]:
        code, out, _ = run(capsys, "verify", target)
        assert code == 0
        assert out.strip().endswith("1/1 reports passed")
    code, out, _ = run(capsys, "verify", "case", "spin_group", "--json")
    assert code == 0
    assert all(json.loads(line)["pass"] for line in out.splitlines())


def test_usage_errors(capsys):
    assert run(capsys, "verify", "case")[0] == 2
    assert run(capsys, "verify", "case", "99")[0] == 2
    assert run(capsys, "verify", "table2", "1")[0] == 2
    assert run(capsys, "dim", "A2", "x")[0] == 2
    assert run(capsys, "dim", "Q2", "1")[0] == 2
    assert run(capsys, "decompose", "A1", "rank=1: (1")[0] == 2
    for argv in (["verify", "ht-lemma", "--bound", "3"], ["frobnicate"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
