"""End-to-end tests for the command-line interface.

Every test drives a real subprocess so the byte-determinism claims are
checked against what a shell user actually sees.
"""

import json
import math
import os
import shutil
import subprocess
import sys

from landau_ladder import FieldConfig, LandauState, QuantumNumbers, wavefunction_value

CSV_VERIFY_HEADER = "suite,check_name,parameters,max_error,tolerance,status,runtime_ms"


def run_cli(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "landau_ladder", *args],
        capture_output=True,
        text=True,
        env=merged,
        timeout=300,
    )
    return proc.returncode, proc.stdout, proc.stderr


# ---------------------------------------------------------------------------
# spectrum


def test_spectrum_table_contents_and_determinism():
    args = ("spectrum", "-B", "1", "--n-max", "2", "--m-min", "-2", "--m-max", "2")
    rc1, out1, _ = run_cli(*args)
    rc2, out2, _ = run_cli(*args)
    assert rc1 == 0 and rc2 == 0
    assert out1 == out2

    lines = out1.splitlines()
    assert lines[0] == "n,m,energy"
    assert len(lines) == 1 + 3 * 5
    assert lines[1] == "0,-2,5.0000000000000000e-01"
    assert "0,0,5.0000000000000000e-01" in lines
    assert "1,2,3.5000000000000000e+00" in lines


def test_spectrum_json_lines():
    rc, out, _ = run_cli("spectrum", "-B", "2", "--n-max", "0", "--m-min", "0",
                         "--m-max", "1", "--format", "json")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert list(first.keys()) == ["n", "m", "energy"]
    assert first == {"n": 0, "m": 0, "energy": 1.0}
    assert json.loads(lines[1])["energy"] == 3.0


def test_spectrum_flag_validation():
    rc, _, err = run_cli("spectrum", "-B", "1", "-B", "2")
    assert rc == 2 and "exactly one" in err
    rc, _, _ = run_cli("spectrum", "-B", "-3")
    assert rc == 2
    rc, _, _ = run_cli("spectrum", "-B", "1", "--n-max", "51")
    assert rc == 2


def test_spectrum_empty_range_is_header_only():
    rc, out, _ = run_cli("spectrum", "-B", "1", "--n-max", "0", "--m-min", "3", "--m-max", "1")
    assert rc == 0
    assert out == "n,m,energy\n"


# ---------------------------------------------------------------------------
# eval


def test_eval_zeta_mode_values():
    rc, out, _ = run_cli("eval", "-B", "2", "--n", "0", "--m", "0", "--zeta", "0,1.0")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "zeta,radial"
    state = LandauState(QuantumNumbers(0, 0), FieldConfig(2.0))
    cells = lines[1].split(",")
    assert float(cells[0]) == 0.0
    # 17 significant digits round-trip exactly
    assert float(cells[1]) == state.norm_const
    assert float(lines[2].split(",")[1]) == state.norm_const * math.exp(-0.5)


def test_eval_zeta_mode_polynomial_zero():
    # L_1^1(2) = 0, so the radial value vanishes there
    rc, out, _ = run_cli("eval", "-B", "2", "--n", "1", "--m", "1", "--zeta", "2.0")
    assert rc == 0
    assert out.splitlines()[1].split(",")[1] == "0.0000000000000000e+00"


def test_eval_grid_mode_origin_value():
    rc, out, _ = run_cli("eval", "-B", "2", "--n", "0", "--m", "0",
                         "--grid-N", "33", "--grid-L", "4.0")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "rho,phi,re,im"
    assert len(lines) == 1 + 33 * 33
    # row-major order: the origin sits at i = j = 16
    cells = lines[1 + 16 * 33 + 16].split(",")
    assert float(cells[0]) == 0.0
    origin = wavefunction_value(LandauState(QuantumNumbers(0, 0), FieldConfig(2.0)), 0.0, 0.0)
    assert float(cells[2]) == origin.real
    assert float(cells[3]) == 0.0


def test_eval_mode_exclusivity_and_domain():
    rc, _, err = run_cli("eval", "-B", "1", "--n", "0", "--m", "0")
    assert rc == 2 and "exactly one" in err
    rc, _, _ = run_cli("eval", "-B", "1", "--n", "0", "--m", "0",
                       "--zeta", "1", "--grid-N", "33")
    assert rc == 2
    rc, _, _ = run_cli("eval", "-B", "1", "--n", "0", "--m", "0", "--zeta", "-1")
    assert rc == 2
    rc, _, _ = run_cli("eval", "-B", "1", "--n", "-2", "--m", "0", "--zeta", "1")
    assert rc == 2


# ---------------------------------------------------------------------------
# ladder


def test_ladder_raise_ground_state():
    rc, out, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "0",
                         "--direction", "raise", "--zeta", "0.5,1.0,2.0")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "zeta,applied,coefficient,target_radial,deviation"
    assert len(lines) == 4
    for line in lines[1:]:
        cells = line.split(",")
        assert cells[2] == "1.4142135623730951e+00"
        assert float(cells[4]) <= 1e-12


def test_ladder_tight_tolerance_exits_one():
    rc, out, _ = run_cli("ladder", "-B", "1", "--n", "2", "--m", "1",
                         "--direction", "raise", "--zeta", "0.5,3.0,7.5",
                         "--tol", "1e-18")
    assert rc == 1
    # the table is still emitted in full
    assert len(out.splitlines()) == 4


def test_ladder_annihilation_rows():
    rc, out, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "0",
                         "--direction", "lower", "--zeta", "1.0,2.0")
    assert rc == 0
    for line in out.splitlines()[1:]:
        cells = line.split(",")
        assert cells[2] == "0.0000000000000000e+00"
        assert cells[3] == "0.0000000000000000e+00"
        assert float(cells[4]) <= 1e-10


def test_ladder_domain_and_flag_errors():
    rc, _, err = run_cli("ladder", "-B", "1", "--n", "1", "--m", "0",
                         "--direction", "lower", "--zeta", "1")
    assert rc == 2 and "validated domain" in err
    rc, _, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "-1",
                       "--direction", "raise", "--zeta", "1")
    assert rc == 2
    rc, _, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "0",
                       "--direction", "raise", "--zeta", "0,1")
    assert rc == 2
    rc, _, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "0",
                       "--direction", "raise", "--zeta", "abc")
    assert rc == 2
    rc, _, _ = run_cli("ladder", "-B", "1", "--n", "0", "--m", "0",
                       "--direction", "raise", "--zeta", "1", "--tol", "-1")
    assert rc == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_quadrature_deterministic_and_well_formed():
    args = ("verify", "--suite", "quadrature")
    rc1, out1, _ = run_cli(*args)
    rc2, out2, _ = run_cli(*args)
    assert rc1 == 0 and rc2 == 0
    assert out1 == out2

    lines = out1.splitlines()
    assert lines[0] == CSV_VERIFY_HEADER
    assert len(lines) > 50
    statuses = set()
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 7
        assert cells[0] == "quadrature"
        assert float(cells[3]) >= 0.0
        statuses.add(cells[5])
        assert cells[6] == "0.0000000000000000e+00"
    assert statuses == {"pass"}

    rc3, out3, _ = run_cli(*args, env={"NO_COLOR": "1"})
    assert rc3 == 0 and out3 == out1


def test_verify_jobs_do_not_change_bytes():
    args = ("verify", "--suite", "ladder", "-B", "1", "--n-max", "2", "--m-max", "2")
    rc1, out1, _ = run_cli(*args, "--jobs", "1")
    rc4, out4, _ = run_cli(*args, "--jobs", "4")
    assert rc1 == 0 and rc4 == 0
    assert out1 == out4
    statuses = {line.split(",")[5] for line in out1.splitlines()[1:]}
    # negative-m ladder probes are reported but not judged
    assert statuses == {"pass", "skipped"}


def test_verify_json_lines_shape():
    rc, out, _ = run_cli("verify", "--suite", "ladder", "-B", "1",
                         "--n-max", "1", "--m-max", "1", "--format", "json")
    assert rc == 0
    for line in out.splitlines():
        record = json.loads(line)
        assert list(record.keys()) == [
            "suite", "check_name", "parameters", "max_error",
            "tolerance", "status", "runtime_ms",
        ]
        assert record["suite"] == "ladder"
        assert record["status"] in {"pass", "fail", "skipped"}
        assert isinstance(record["parameters"], dict)
        assert record["runtime_ms"] == 0.0


def test_verify_tolerance_override_forces_failure():
    rc, out, _ = run_cli("verify", "--suite", "quadrature", "--tol", "exactness=0")
    assert rc == 1
    assert any(line.split(",")[5] == "fail" for line in out.splitlines()[1:])


def test_verify_flag_validation():
    rc, _, err = run_cli("verify", "--suite", "quadrature", "--tol", "no_such_check=1e-3")
    assert rc == 2 and "unknown tolerance" in err
    rc, _, _ = run_cli("verify", "--suite", "quadrature", "--jobs", "0")
    assert rc == 2
    rc, _, _ = run_cli("verify", "--suite", "velocity", "--grid-N", "64")
    assert rc == 2
    rc, _, _ = run_cli("verify", "--suite", "nope")
    assert rc == 2


def test_verify_timing_flag_reports_real_durations():
    rc, out, _ = run_cli("verify", "--suite", "quadrature", "--timing")
    assert rc == 0
    runtimes = [float(line.split(",")[6]) for line in out.splitlines()[1:]]
    assert any(t > 0.0 for t in runtimes)


# ---------------------------------------------------------------------------
# figures and the console script


def test_plot_dir_writes_figure(tmp_path):
    out_dir = tmp_path / "figs"
    rc, out, err = run_cli("eval", "-B", "1", "--n", "1", "--m", "2",
                           "--zeta", "0.5,1,2,4,8", "--plot-dir", str(out_dir))
    assert rc == 0
    assert out.splitlines()[0] == "zeta,radial"
    figure_lines = [line for line in err.splitlines() if line.startswith("figure: ")]
    assert len(figure_lines) == 1
    path = figure_lines[0].removeprefix("figure: ")
    assert os.path.isfile(path)
    assert os.path.getsize(path) > 0


def test_console_script_matches_module_invocation():
    exe = shutil.which("landau-ladder")
    assert exe is not None
    proc = subprocess.run([exe, "spectrum", "-B", "2", "--n-max", "1",
                           "--m-min", "-1", "--m-max", "1"],
                          capture_output=True, text=True, timeout=300)
    rc, out, _ = run_cli("spectrum", "-B", "2", "--n-max", "1", "--m-min", "-1", "--m-max", "1")
    assert proc.returncode == 0 and rc == 0
    assert proc.stdout == out
