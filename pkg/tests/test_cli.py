import json
import math
import subprocess
import sys

import pytest

from hopnorms.cli import main
from hopnorms.families import jacobi
from hopnorms.measures import DensityHandle, renyi_entropy


def run_cli(args, capsys):
    rc = main(args)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def parse_record(line):
    out = {}
    for tok in line.strip().split():
        k, _, v = tok.partition("=")
        out[k] = v
    return out


def test_compute_weighted_norm(capsys):
    rc, out, _ = run_cli(["compute", "--family", "hermite", "--n", "0",
                          "--op", "weighted-norm", "--q", "4", "--engine", "quadrature"], capsys)
    assert rc == 0
    rec = parse_record(out)
    assert float(rec["value"]) == pytest.approx(math.sqrt(math.pi / 4.0), rel=1e-10)
    assert float(rec["rel_err_estimate"]) <= 1e-11


def test_compute_laplace_x0(capsys):
    rc, out, _ = run_cli(["compute", "--family", "laguerre", "--alpha", "2", "--n", "0",
                          "--op", "laplace-x0"], capsys)
    assert rc == 0
    rec = parse_record(out)
    assert float(rec["x0"]) == 2.0


def test_compute_wrapper_fidelity(capsys):
    rc, out, _ = run_cli(["compute", "--family", "jacobi", "--alpha", "1", "--beta", "0",
                          "--n", "1", "--op", "renyi", "--q", "2"], capsys)
    assert rc == 0
    rec = parse_record(out)
    lib = renyi_entropy(DensityHandle(jacobi(1.0, 0.0), 1, True), 2.0)
    assert float(rec["value"]) == lib  # bit-for-bit


def test_compute_json_schema(capsys):
    rc, out, _ = run_cli(["compute", "--family", "hermite", "--n", "1",
                          "--op", "shannon", "--format", "json"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["record"]["family"] == "hermite"


def test_sweep_deterministic_csv(tmp_path, capsys):
    args = ["sweep", "--family", "hermite", "--n", "2", "--op", "weighted-norm",
            "--grid", "q=25,50,100,200", "--engine", "quadrature", "--engine", "asymptotic-q"]
    rc1, out1, _ = run_cli(args, capsys)
    rc2, out2, _ = run_cli(args, capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert len(lines) == 1 + 8  # header + 4 grid points x 2 engines
    header = lines[0].split(",")
    assert header[:7] == ["family", "n", "q", "alpha", "beta", "lambda", "engine"]
    # engines alternate per grid point in canonical order
    assert lines[1].split(",")[6] == "quadrature"
    assert lines[2].split(",")[6] == "asymptotic-q"


def test_sweep_json(tmp_path, capsys):
    out_file = tmp_path / "rows.json"
    rc, _, _ = run_cli(["sweep", "--family", "laguerre", "--alpha", "2.5", "--n", "1",
                        "--op", "unweighted-norm", "--grid", "q=2,4",
                        "--engine", "quadrature", "--engine", "bell",
                        "--format", "json", "--out", str(out_file)], capsys)
    assert rc == 0
    payload = json.loads(out_file.read_text())
    assert payload["schema"] == 1
    assert len(payload["rows"]) == 4
    by_engine = {(r["engine"], r["q"]): r for r in payload["rows"]}
    for q in (2.0, 4.0):
        lq = by_engine[("quadrature", q)]["log_value"]
        lb = by_engine[("bell", q)]["log_value"]
        assert abs(lq - lb) < 1e-8


def test_sweep_rejects_incompatible_engine(capsys):
    rc, _, err = run_cli(["sweep", "--family", "hermite", "--n", "2",
                          "--op", "unweighted-norm", "--grid", "q=3",
                          "--engine", "bell"], capsys)
    assert rc == 2
    assert "bell" in err


def test_sweep_rejects_hermite_parameter_engine(capsys):
    rc, _, err = run_cli(["sweep", "--family", "hermite", "--n", "1",
                          "--op", "weighted-norm", "--grid", "q=2",
                          "--engine", "asymptotic-parameter"], capsys)
    assert rc == 2


def test_sweep_geometric_grid(capsys):
    rc, out, _ = run_cli(["sweep", "--family", "laguerre", "--n", "1", "--q", "2",
                          "--op", "weighted-norm", "--grid", "alpha=geom:100:800:4",
                          "--engine", "asymptotic-parameter"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    alphas = [float(l.split(",")[3]) for l in lines[1:]]
    assert alphas == pytest.approx([100.0, 200.0, 400.0, 800.0])


def test_sweep_records_row_failures(capsys):
    # jacobi beta=0 violates the laplace-route precondition: the failing rows
    # carry the diagnostic in the error column and the exit code reflects it
    rc, out, _ = run_cli(["sweep", "--family", "jacobi", "--alpha", "1", "--beta", "0",
                          "--n", "1", "--op", "weighted-norm", "--grid", "q=50,100",
                          "--engine", "quadrature", "--engine", "asymptotic-q"], capsys)
    assert rc == 3
    lines = out.strip().splitlines()
    assert len(lines) == 5
    quad_rows = [l for l in lines[1:] if ",quadrature," in l]
    asym_rows = [l for l in lines[1:] if ",asymptotic-q," in l]
    assert all(l.endswith(",") for l in quad_rows)  # empty error column
    assert all("alpha, beta > 0" in l for l in asym_rows)


def test_usage_errors(capsys):
    rc, _, _ = run_cli(["compute", "--family", "laguerre", "--n", "0",
                        "--op", "weighted-norm", "--q", "2"], capsys)  # missing alpha
    assert rc == 2
    rc, _, _ = run_cli(["compute", "--family", "hermite", "--n", "0",
                        "--op", "renyi"], capsys)  # missing q
    assert rc == 2
    rc, _, _ = run_cli(["bogus-command"], capsys)
    assert rc == 2


def test_fisher_divergence_is_usage_error(capsys):
    rc, _, err = run_cli(["compute", "--family", "gegenbauer", "--lambda", "1",
                          "--n", "0", "--op", "fisher"], capsys)
    assert rc == 2
    assert "diverges" in err


def test_validate_identities_exit_code(tmp_path, capsys):
    report = tmp_path / "report.json"
    rc, out, _ = run_cli(["validate", "identities", "--out", str(report)], capsys)
    assert rc == 0
    assert "[PASS]" in out
    payload = json.loads(report.read_text())
    assert payload["schema"] == 1
    assert all(c["status"] in ("pass", "fail", "info") for c in payload["checks"])


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hopnorms.cli", "compute",
                          "--family", "hermite", "--n", "0", "--op", "weighted-norm",
                          "--q", "4"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "value=" in res.stdout
