import io
import json
import subprocess
import sys

import pytest

from a2fusion.cli import run
from a2fusion.cones import ConeSupportedExpressionSet
from a2fusion.multiplicity import diagram_from_json, weight_diagram
from a2fusion.tensor import table_from_json, tensor_decomposition
from a2fusion.fusion import fusion_decomposition


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_fuse_table():
    code, out, _ = call("fuse", 4, 2, 3, 1, "--level", 7)
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert rows[0] == ["e", "f", "N"]
    body = [tuple(map(int, r)) for r in rows[1:]]
    assert body == sorted(body)
    assert {(e, f): n for e, f, n in body} == fusion_decomposition((4, 2), (3, 1), 7)
    assert sum(n == 1 for *_, n in body) == 7 and sum(n == 2 for *_, n in body) == 2


def test_fuse_json_round_trip():
    code, out, _ = call("fuse", 4, 2, 3, 1, "--level", 7, "--json", "--mode", "alcoves")
    data = json.loads(out)
    assert code == 0 and data["level"] == 7 and data["mode"] == "alcoves"
    assert table_from_json(data["table"]) == fusion_decomposition((4, 2), (3, 1), 7)
    code, out, _ = call("fuse", 4, 2, 3, 1, "--level", 7, "--nu", 3, 2, "--json")
    assert json.loads(out)["N"] == 2


def test_bmw():
    assert call("bmw", 4, 2, 3, 1, 2, 4, "--level", 7)[:2] == (0, "2\n")
    code, out, _ = call("bmw", 4, 2, 3, 1, 2, 4, "--level", 7, "--explain")
    assert json.loads(out) == {"A": 9, "B": 7, "k0min": 6, "k0max": 7, "l0max": 7, "delta": 1, "N": 2}
    code, out, _ = call("bmw", 1, 0, 0, 0, 0, 1, "--level", 3, "--explain")
    assert json.loads(out)["A"] == "4/3"


def test_tensor_and_weights():
    code, out, _ = call("tensor", 0, 0, 0, 0, "--json")
    assert code == 0 and table_from_json(json.loads(out)["table"]) == {(0, 0): 1}
    code, out, _ = call("tensor", 4, 2, 3, 1, "--json")
    assert table_from_json(json.loads(out)["table"]) == tensor_decomposition((4, 2), (3, 1))
    assert call("tensor", 4, 2, 3, 1, "--nu", 2, 4)[1] == "2\n"
    code, out, _ = call("weights", 2, 1, "--json")
    assert diagram_from_json(json.loads(out)["diagram"]) == weight_diagram((2, 1))
    code, out, _ = call("weights", 1, 0)
    assert out.splitlines()[0].split() == ["x", "y", "mult"] and len(out.splitlines()) == 4
    assert call("mult", 1, 1, 0, 0)[1] == "2\n"
    assert json.loads(call("mult", 1, 1, 0, 0, "--json")[1])["mult"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["fuse", "4", "2", "3", "1"],
        ["bmw", "1", "2", "3"],
        ["tensor", "1", "x", "0", "0"],
        ["fuse", "1", "0", "0", "0", "--level", "-1"],
        ["fuse", "1", "0", "0", "0", "--level", "3", "--mode", "other"],
        ["nonsense"],
        [],
    ],
)
def test_parse_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_invalid_weights_exit_2():
    code, _, err = call("fuse", 9, 0, 0, 0, "--level", 7)
    assert code == 2 and "alcove" in err


def test_verify_is_deterministic():
    first = call("verify", "--max-level", 3)
    assert first[0] == 0 and "all agree" in first[1]
    assert call("verify", "--max-level", 3, "--jobs", 2) == first


def test_verify_reports_counterexample(monkeypatch):
    import a2fusion.verify as verify

    real = verify.bmw_fusion
    monkeypatch.setattr(verify, "bmw_fusion", lambda lam, mu, nu, level: real(lam, mu, nu, level) + (nu == (1, 1)))
    code, out, _ = call("verify", "--max-level", 2)
    assert code == 1
    assert "first at level 2" in out and "nu=(1, 1)" in out


def test_prove_emits_files(tmp_path):
    cones, cert = tmp_path / "cones.json", tmp_path / "cert.txt"
    code, out, _ = call("prove", "--emit-cones", cones, "--emit-certificate", cert)
    assert code == 0 and "equivalent" in out
    data = json.loads(cones.read_text())
    kw = ConeSupportedExpressionSet.from_json(data["kac_walton"])
    assert len(kw.nonzero_pieces()) == 27
    assert kw.evaluate((4, 2, 3, 1, 2, 4, 7)) == 2
    assert ConeSupportedExpressionSet.from_json(data["closed_formula"]).to_json() == data["closed_formula"]
    assert "matched closed-formula piece" in cert.read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "a2fusion", "bmw", "4", "2", "3", "1", "2", "4", "--level", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
