import json

import pytest

from builders import theta
from surftw.cli import embedding_record, run
from surftw.io import dump_json


def lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(x) for x in out.splitlines() if x.strip()]


def test_todinca_then_tw(tmp_path, capsys):
    path = tmp_path / "t1.json"
    assert run(["gen", "todinca", "-p", "1", "-o", str(path)]) == 0
    capsys.readouterr()
    assert run(["tw", "--exact", str(path)]) == 0
    assert lines(capsys)[-1]["tw"] == 2


def test_bramble_order_from_generated_file(tmp_path, capsys):
    path = tmp_path / "t1.json"
    run(["gen", "todinca", "-p", "1", "-o", str(path)])
    capsys.readouterr()
    assert run(["bramble-order", str(path)]) == 0
    assert lines(capsys)[-1]["order"] == 3


def test_gkp_dual_vertex_count(tmp_path, capsys):
    g, gd = tmp_path / "g.json", tmp_path / "gd.json"
    assert run(["gen", "gkp", "-k", "1", "-p", "1", "-o", str(g)]) == 0
    assert run(["dual", str(g), "-o", str(gd)]) == 0
    assert json.loads(gd.read_text())["stats"]["vertices"] == 255
    assert run(["facewidth", str(g), "--theta", "1"]) == 0
    assert lines(capsys)[-1]["at_least"] is True


def test_generation_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["gen", "gkp", "-k", "1", "-p", "1", "--crosscap", "-o", str(a)])
    run(["gen", "gkp", "-k", "1", "-p", "1", "--crosscap", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_embedding_commands(tmp_path, capsys):
    path = tmp_path / "theta.json"
    dump_json(embedding_record(theta()), path)
    assert run(["check-bound", str(path)]) == 0
    assert lines(capsys)[-1]["verdict"] == "PASS"
    assert run(["ptree", str(path), "-o", str(tmp_path / "T.json")]) == 0
    assert lines(capsys)[-1]["width"] == 1
    assert run(["radial", str(path)]) == 0
    assert lines(capsys)[-1]["vertices"] == 5


def test_fuzz_summary(capsys):
    assert run(["fuzz", "--max-darts", "6", "--count", "20", "--seed", "7"]) == 0
    captured = capsys.readouterr()
    assert "0 violations" in captured.err
    assert json.loads(captured.out)["violations"] == 0


def test_exit_codes(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    assert run(["tw", str(missing)]) == 2
    path = tmp_path / "g.json"
    run(["gen", "grid", "-n", "5", "-m", "5", "-o", str(path)])
    assert run(["tw", "--exact", str(path), "--limit", "10"]) == 3
    assert run(["ptree", str(path)]) == 2


def test_unknown_command():
    with pytest.raises(SystemExit):
        run(["frobnicate"])
