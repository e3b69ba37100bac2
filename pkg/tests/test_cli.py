import io
import json
import subprocess
import sys

import jsonschema
import numpy as np
import pytest

from implodekit.cli import COMMANDS, parse_group, parse_weight, run
from implodekit.sun import random_su


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _json(capsys, *argv):
    code, out, err = _run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    schema = COMMANDS[argv[0]][1]
    jsonschema.validate(doc, schema)
    return doc


def test_parse_group_forms(tmp_path):
    assert parse_group("SU(3)").cartan == parse_group("A2").cartan
    assert parse_group("SO(3)").isogeny == "adjoint"
    assert parse_group("B3/adjoint").isogeny == "adjoint"
    assert parse_group("g2").rank_ss == 2
    assert parse_group("U(2)").central_rank == 1
    assert parse_group("T3").central_rank == 3
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"name": "SO3", "cartan": [[2]], "coroot_coords": [[2]]}))
    assert parse_group(str(f)).name == "SO3"


def test_parse_weight():
    assert parse_weight("1, 1/2") == (1, parse_weight("1/2")[0])
    assert parse_weight("3 0") == (3, 0)


def test_describe_group(capsys):
    doc = _json(capsys, "describe-group", "--group", "A2")
    assert doc["dim"] == 8 and doc["weyl_group_order"] == 6 and len(doc["positive_roots"]) == 3


def test_faces(capsys):
    doc = _json(capsys, "faces", "--group", "A2")
    assert sorted(f["dim"] for f in doc["faces"]) == [0, 1, 1, 2]
    assert len(_json(capsys, "faces", "--group", "A1")["order"]) == 3


def test_strata(capsys):
    doc = _json(capsys, "strata", "--group", "A2")
    assert len(doc["strata"]) == 4
    assert sorted(s["real_dim"] for s in doc["strata"]) == [0, 6, 6, 10]
    so3 = _json(capsys, "strata", "--group", "SO(3)")
    vertex = [s for s in so3["strata"] if s["face"] == [0]][0]
    assert vertex["smoothness"] == {"kind": "OrbifoldOnly", "k": 1, "order": 2}


def test_smooth_locus(capsys):
    doc = _json(capsys, "smooth-locus", "--group", "A2")
    assert doc["smooth_faces"] == [[], [0], [1]]


def test_embed(capsys):
    doc = _json(capsys, "embed", "--group", "A2", "--lambda", "1,2", "--seed", "4")
    assert doc["quadric_residual"] < 1e-12
    ident = _json(capsys, "embed", "--group", "SU(2)", "--lambda", "3", "--identity")
    assert ident["modules"][0]["coeffs"][1] == [0.0, 0.0]


def test_verify_passes(capsys):
    doc = _json(capsys, "verify", "--suite", "geometry", "--group", "A1", "--seed", "42",
                "--count", "200", "--tolerance", "1e-9")
    assert doc["pass"] and all(c["pass"] for c in doc["checks"])
    for suite in ("contact", "embedding", "quadric", "hilbert"):
        assert _json(capsys, "verify", "--suite", suite, "--group", "A2", "--count", "20")["pass"]


def test_verify_failure_exits_one(capsys):
    code, out, err = _run(capsys, "verify", "--suite", "geometry", "--group", "A1", "--count", "10",
                          "--tolerance", "1e-300")
    assert code == 1 and "check failed" in err
    assert json.loads(out)["pass"] is False


def test_quantize(capsys):
    doc = _json(capsys, "quantize", "--tensor", "1,0 x 0,1", "--group", "A2")
    assert doc["character"] == [{"weight": [0, 0], "mult": 1}, {"weight": [1, 1], "mult": 1}]
    doc = _json(capsys, "quantize", "--induce", "-3; 2; -1", "--group", "A1")
    assert doc["character"] == [{"weight": [1], "mult": -1}, {"weight": [2], "mult": 1}]


def test_implode_quantize(capsys):
    doc = _json(capsys, "implode-quantize", "--group", "A2", "--orbits", "2,1 x 1,1")
    assert doc["lr_agrees"] is True
    assert _json(capsys, "implode-quantize", "--group", "B2")["character"] == [{"weight": [0, 0], "mult": 1}]


def test_cut_polytope(capsys):
    doc = _json(capsys, "cut-polytope", "--group", "A1", "--lambda0", "1", "--points", "0;1;2;3")
    assert doc["points"] == [["1"], ["2"], ["3"]]
    code, _, err = _run(capsys, "cut-polytope", "--group", "A2", "--lambda0", "1,1", "--points", "1,1",
                        "--face", "0")
    assert code == 2 and "closure" in err


def _pair_file(tmp_path, k1, k2, lam1, lam2):
    enc = lambda m: [[[z.real, z.imag] for z in row] for row in m]  # noqa: E731
    f = tmp_path / "pair.json"
    f.write_text(json.dumps({"k1": enc(k1), "lambda1": lam1, "k2": enc(k2), "lambda2": lam2}))
    return f


def test_equivalent(capsys, tmp_path, monkeypatch):
    k = random_su(2, np.random.default_rng(0))
    f = _pair_file(tmp_path, np.eye(2), k, [0], [0])
    assert _json(capsys, "equivalent", "--group", "A1", "--input", str(f))["equivalent"] is True
    f = _pair_file(tmp_path, np.eye(2), -np.eye(2), [1], [1])
    assert _json(capsys, "equivalent", "--group", "A1", "--input", str(f))["equivalent"] is False
    monkeypatch.setattr(sys, "stdin", io.StringIO(f.read_text()))
    assert _json(capsys, "equivalent", "--group", "A1", "--input", "-")["equivalent"] is False


@pytest.mark.parametrize("argv", [
    ["strata", "--group", "Q7"],
    ["strata"],
    ["embed", "--group", "B2", "--lambda", "1,1"],
    ["embed", "--group", "A2"],
    ["embed", "--group", "A2", "--lambda", "1,x"],
    ["embed", "--group", "A2", "--lambda=-1,0"],
    ["quantize", "--group", "A2"],
    ["quantize", "--group", "A2", "--tensor", "1/2,0 x 0,1"],
    ["quantize", "--group", "A2", "--tensor", "-1,0 x 0,1"],
    ["verify", "--suite", "geometry", "--group", "B2"],
    ["equivalent", "--group", "A1", "--input", "/nonexistent/file.json"],
])
def test_input_errors_exit_two(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("implodekit: error")


def test_argument_errors_exit_two(capsys):
    for argv in (["strata", "--group", "A2", "--seed", "-1"], ["verify", "--suite", "nope"],
                 ["verify", "--suite", "hilbert", "--count", "0"], ["frobnicate"]):
        with pytest.raises(SystemExit) as e:
            run(argv)
        assert e.value.code == 2
    capsys.readouterr()


def test_byte_identical_reruns(capsys):
    argv = ["verify", "--suite", "embedding", "--group", "A2", "--seed", "7", "--count", "30"]
    assert _run(capsys, *argv)[1] == _run(capsys, *argv)[1]
    embed = ["embed", "--group", "A2", "--lambda", "1,1", "--seed", "3"]
    assert _run(capsys, *embed)[1] == _run(capsys, *embed)[1]


def test_seed_from_environment(capsys, monkeypatch):
    explicit = _run(capsys, "verify", "--suite", "contact", "--seed", "11", "--count", "5")[1]
    monkeypatch.setenv("IMPLODEKIT_SEED", "11")
    assert _run(capsys, "verify", "--suite", "contact", "--count", "5")[1] == explicit
    monkeypatch.setenv("IMPLODEKIT_SEED", "not-a-number")
    assert _run(capsys, "verify", "--suite", "contact", "--count", "5")[0] == 2


def test_output_file_and_text_format(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = _run(capsys, "strata", "--group", "A1", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["group"] == "A1"
    code, out, _ = _run(capsys, "strata", "--group", "A1", "--format", "text")
    assert code == 0 and "real_dim: 4" in out and not out.lstrip().startswith("{")


def test_floats_have_twelve_significant_digits(capsys):
    doc = _json(capsys, "embed", "--group", "A1", "--lambda", "1", "--seed", "5")
    for re_, im in doc["modules"][0]["coeffs"]:
        for x in (re_, im):
            assert len(repr(abs(x)).replace(".", "").lstrip("0").split("e")[0]) <= 12


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "implodekit", "strata", "--group", "SU(2)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert sorted(s["real_dim"] for s in json.loads(proc.stdout)["strata"]) == [0, 4]
