import json
import os
import subprocess
import sys

import pytest

from symlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize(
    "d,k,want", [("22", "2", "2^22 * 5^2"), ("0", "4", "105"), ("1", "3", "2^4 * 3^4")]
)
def test_theta_text(capsys, d, k, want):
    code, out, _ = run(capsys, "theta", d, k)
    assert code == 0 and out.strip() == want


def test_theta_json_and_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "theta", "1", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "ok"
    assert data["payload"]["theta"] == "2^4 * 3^4" and data["payload"]["value"] == "1296"


def test_theta_bad_input(capsys):
    assert run(capsys, "theta", "-1", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["theta", "x", "2"])
    assert exc.value.code == 2


def test_verify_passes(capsys):
    code, data = run_json(capsys, "verify", "--dmax", "2", "--kmax", "3", "--samples", "5", "--seed", "7")
    assert code == 0 and data["payload"]["all_equal"]
    assert len(data["payload"]["shapes"]) == 9
    code, out, _ = run(capsys, "verify", "--dmax", "0", "--kmax", "6")
    assert code == 0 and out.strip().endswith("all equal: True")


def test_verify_is_deterministic(capsys):
    args = ("verify", "--dmax", "1", "--kmax", "2", "--samples", "3", "--seed", "11")
    _, a, _ = run(capsys, "--format", "json", *args)
    _, b, _ = run(capsys, "--format", "json", *args)
    _, c, _ = run(capsys, "--format", "json", *args[:-1], "12")
    assert a == b and a != c


def test_verify_corrupted_theta_fails(capsys):
    code, out, _ = run(capsys, "verify", "--corrupt-theta", "--dmax", "1", "--kmax", "2", "--samples", "2")
    assert code == 1 and "FAIL" in out


def test_verify_size_limit(capsys):
    assert run(capsys, "verify", "--dmax", "5", "--kmax", "5")[0] == 3


def test_sym_gram(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"size": 2, "rows": [["1", "0"], ["0", "1"]]}))
    code, data = run_json(capsys, "sym-gram", "--gram", str(path), "-k", "2", "--det")
    assert code == 0
    p = data["payload"]
    assert p["basis"] == ["(2,0)", "(1,1)", "(0,2)"]
    assert p["gram"] == {"size": 3, "rows": [["3", "0", "1"], ["0", "1", "0"], ["1", "0", "3"]]}
    assert p["det"] == p["closed_form"] == "8" and p["equal"]


def test_sym_gram_bad_files(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"size": 2, "rows": [["1", "2"], ["3", "1"]]}))
    assert run(capsys, "sym-gram", "--gram", str(bad), "-k", "2")[0] == 2
    assert run(capsys, "sym-gram", "--gram", str(tmp_path / "missing.json"), "-k", "2")[0] == 2
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"size": 1, "rows": [["1"]]}))
    assert run(capsys, "sym-gram", "--gram", str(big), "-k", "9")[0] == 3


def test_orthopoly(capsys):
    code, out, _ = run(capsys, "orthopoly", "2", "5")
    assert code == 0 and out.strip() == "x^2 - 1/3"
    code, data = run_json(capsys, "orthopoly", "2", "5")
    assert data["payload"]["norm_hat"] == "8/9"
    assert run(capsys, "orthopoly", "4", "5")[0] == 2


def test_hbasis(capsys):
    code, out, _ = run(capsys, "hbasis", "1", "2", "--gram")
    assert code == 0
    assert "diagonal: (3, 1, 8/3)" in out and "product D = 8" in out
    code, data = run_json(capsys, "hbasis", "1", "2", "--transition")
    assert data["payload"]["transition"] == [["1", "0", "0"], ["0", "1", "0"], ["1/3", "0", "1"]]
    code, out, _ = run(capsys, "hbasis", "1", "2")
    assert "h(0,2) = x1^2 - 1/3*x0^2" in out
    assert run(capsys, "hbasis", "6", "6")[0] == 3


def test_hk(capsys):
    code, out, _ = run(capsys, "hk", "--manifold", "K3_Hilb", "-k", "3")
    assert code == 0 and "discriminant 2^1106 * 3^92" in out
    code, data = run_json(capsys, "hk", "--manifold", "K3_Hilb", "-k", "3", "--torsion", "2^277 * 3^46")
    assert data["payload"]["complement_discriminant"] == "2^552"
    code, data = run_json(capsys, "hk", "--manifold", "OG10")
    assert data["payload"]["prime_set"] == [2, 3, 5]
    assert run(capsys, "hk", "--manifold", "Nope")[0] == 2
    assert run(capsys, "hk", "--manifold", "K3_Hilb", "-k", "3", "--torsion", "2^900")[0] == 2


def test_lattice_embedding(tmp_path, capsys):
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"target_gram": {"size": 2, "rows": [["1", "0"], ["0", "1"]]},
                                "basis_rows": [[1, 1]]}))
    code, data = run_json(capsys, "lattice", str(path))
    p = data["payload"]
    assert code == 0
    assert p["torsion"] == "1" and p["discriminant"] == "2"
    assert p["complement_discriminant"] == "2" == p["predicted_complement_discriminant"]


def test_lattice_gram(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"size": 2, "rows": [["2", "1"], ["1", "2"]]}))
    code, data = run_json(capsys, "lattice", str(path))
    assert data["payload"] == {"rank": 2, "discriminant": "3", "unimodular": False}


def test_module_entry_point():
    env = dict(os.environ)
    res = subprocess.run(
        [sys.executable, "-m", "symlat", "theta", "0", "4"], capture_output=True, text=True, env=env
    )
    assert res.returncode == 0 and res.stdout.strip() == "105"
