import csv
import io
import json
import math
import subprocess
import sys

import pytest

from batres.cli import format_complex, parse_complex, parse_grid, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_format_complex():
    assert format_complex(2 + 1j, 6) == "2.000000+1.000000i"
    assert format_complex(-0.0 - 0.0j, 2) == "0.00+0.00i"
    assert format_complex(1 - 2.5j, 1) == "1.0-2.5i"


def test_parsers():
    assert parse_complex("1+0.5i") == 1 + 0.5j
    assert list(parse_grid("0:1:3")) == [0.0, 0.5, 1.0]
    assert list(parse_grid("0.5,2")) == [0.5, 2.0]


def test_spectrum_row():
    code, out, _ = call("spectrum", "--gamma", "0.5", "--omega", "2", "--n-max", "1", "--l-max", "1")
    assert code == 0
    assert "n=0,l=1,E+ = 2.000000+1.000000i" in out.splitlines()


def test_spectrum_lattice_in_csv():
    code, out, _ = call("spectrum", "--gamma", "0.5", "--omega", "2", "--n-max", "10", "--l-max", "5",
                        "--format", "csv", "--precision", "15")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    res = [r for r in rows if r["family"] == "resonance"]
    assert len(res) == 11 * 11
    for r in res:
        n, l = int(r["n"]), int(r["l"])
        assert float(r["E_plus_re"]) == 2.0 * l
        assert float(r["E_plus_im"]) == 0.5 * (abs(l) + 2 * n + 1)
        assert float(r["E_minus_im"]) == -0.5 * (abs(l) + 2 * n + 1)


def test_verify_identities():
    code, out, _ = call("verify", "identities", "--tolerance", "1e-10")
    assert code == 0
    for name in ("Kummer", "Tricomi reflection", "Gamma residue", "Gauss 2F1"):
        assert any(line.startswith("PASS") and name in line for line in out.splitlines())


def test_verify_failure_exit_code():
    code, out, _ = call("verify", "identities", "--tolerance", "1e-30")
    assert code == 1 and "FAIL" in out


def test_evolve_half_life_row():
    code, out, _ = call("evolve", "--gamma", "1", "--t", "0.6931")
    assert code == 0
    row = next(line.split() for line in out.splitlines() if line.startswith("0  0"))
    assert row[-1] == "0.500000"


def test_evolve_exact_half_life():
    code, out, _ = call("evolve", "--gamma", "1", "--t", repr(math.log(2)), "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["amplitude_ratio"] == "0.500000"


def test_evolve_json_and_curves():
    code, out, _ = call("evolve", "--t-grid", "0:3:4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"config", "results", "summary"}
    assert set(doc["summary"]) == {"passed", "failed", "max_error"}
    first = [r for r in doc["results"] if (r["n"], r["l"]) == (0, 0)]
    assert [r["t"] for r in first] == [0.0, 1.0, 2.0, 3.0]
    assert all(b["abs_ct"] < a["abs_ct"] for a, b in zip(first, first[1:]))


def test_evolve_non_convergent_function():
    code, _, err = call("evolve", "--phi", "gaussian", "--t", "1")
    assert code == 1 and "did not converge" in err


def test_evolve_expression_and_negative_time():
    code, out, _ = call("evolve", "--phi-expr", "exp(-(0.1-0.5j)*rho**2)", "--t", "1", "--format", "csv")
    assert code == 0 and out.startswith("n,l,t,")
    assert call("evolve", "--t", "-1")[0] == 2
    assert call("evolve", "--phi-expr", "__import__('os')")[0] == 2


def test_resonances_probe():
    code, out, _ = call("resonances", "--probe", "--n-max", "3", "--l-max", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["results"]) == 20
    assert doc["summary"]["failed"] == 0


def test_compare_reps():
    code, out, _ = call("compare-reps", "--gamma", "0.5", "--omega", "2", "--n-max", "5", "--l-max", "5")
    assert code == 0
    assert "matches: 0" in out and "hyperbolic poles: 0/100" in out
    assert "elliptic poles: 66/66" in out


def test_eval_csv_header_and_pairs():
    code, out, _ = call("eval", "--family", "iho_plus", "--at", "0:2:3", "--format", "csv")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "rho,value_re,value_im"
    assert lines[1] == "0.000000,1.000000,1.000000"
    assert "\r" not in out


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["spectrum", "--precision", "16"],
    ["spectrum", "--gamma", "1", "--kappa", "0.5"],
    ["spectrum", "--omega", "1", "--kappa", "3"],
    ["eval", "--family", "nope"],
    ["eval", "--at", "1:2"],
    ["verify", "nosuite"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_precision_flag():
    code, out, _ = call("spectrum", "--gamma", "0.5", "--omega", "2", "--n-max", "0", "--l-max", "0",
                        "--precision", "2")
    assert "n=0,l=0,E+ = 0.00+0.50i" in out
    code, out, _ = call("spectrum", "--n-max", "0", "--l-max", "0", "--precision", "15")
    assert "n=0,l=0,E+ = 0.000000000000000+1.000000000000000i" in out


def test_config_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# settings\ngamma = 0.5\nomega=2\nn_max=0\nl-max=1\nprecision=3\n")
    code, out, _ = call("spectrum", "--config", str(cfg))
    assert "n=0,l=1,E+ = 2.000+1.000i" in out
    code, out, _ = call("spectrum", "--config", str(cfg), "--gamma", "1")
    assert "n=0,l=1,E+ = 2.000+2.000i" in out
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour=blue\n")
    assert call("spectrum", "--config", str(bad))[0] == 2


def test_byte_identical_output(tmp_path, monkeypatch):
    path = tmp_path / "out.json"
    call("compare-reps", "--format", "json", "--output", str(path))
    first = path.read_bytes()
    monkeypatch.setenv("BATRES_SEED", "12345")
    monkeypatch.setenv("BATRES_THREADS", "1")
    call("compare-reps", "--format", "json", "--output", str(path))
    assert path.read_bytes() == first


def test_threads_do_not_change_results(monkeypatch):
    monkeypatch.setenv("BATRES_THREADS", "1")
    one = call("verify", "semigroup", "--format", "csv")[1]
    monkeypatch.setenv("BATRES_THREADS", "4")
    four = call("verify", "semigroup", "--format", "csv", "--workers", "4")[1]
    assert one == four


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "batres", "spectrum", "--n-max", "0", "--l-max", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "E+ = 0.000000+1.000000i" in proc.stdout
