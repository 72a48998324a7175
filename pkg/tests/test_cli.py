"""Command-line interface: table formats, exit codes, SVG output, and the
config-file plumbing."""

import json

import pytest

from wilsonracah.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_csv_rows(capsys):
    code, out, _ = run(
        ["spectrum", "--lambda", "0.2", "--mu", "-5", "--nu", "5.5", "--a", "5.5", "--b", "5.5"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == "m,E_m"
    rows = [line.split(",") for line in lines[2:]]
    assert [r[0] for r in rows] == ["0", "1", "2", "3", "4"]
    expect = [-0.5, -0.32, -0.18, -0.08, -0.02]
    assert all(abs(float(r[1]) - e) < 1e-14 for r, e in zip(rows, expect))


def test_spectrum_deterministic_output(capsys):
    argv = ["spectrum", "--lambda", "0.2", "--mu", "-5", "--nu", "5.5", "--a", "5.5", "--b", "5.5"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_potential_matrix_seed_entry(capsys):
    code, out, _ = run(
        ["matrix", "--what", "potential", "--size", "3", "--lambda", "0.2", "--mu", "0.8", "--a", "1.0"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    first_row = lines[2].split(",")
    assert abs(float(first_row[0]) - 0.006) < 1e-15


def test_matrix_json_format(capsys):
    code, out, _ = run(
        [
            "matrix", "--what", "hamiltonian", "--size", "2", "--mu", "0.8", "--a", "1.0",
            "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["columns"] == ["col0", "col1"]
    assert abs(payload["rows"][0][0] - 0.016) < 1e-15


def test_invalid_parameters_exit_code(capsys):
    code, _, err = run(["spectrum", "--lambda", "-1", "--mu", "-5", "--a", "5.5"], capsys)
    assert code == 2
    assert "invalid parameters" in err


def test_hamiltonian_rejects_asymmetric_parameters(capsys):
    code, _, err = run(
        ["matrix", "--what", "hamiltonian", "--mu", "0.8", "--nu", "0.9", "--a", "1.0"],
        capsys,
    )
    assert code == 2
    assert "invalid parameters" in err


def test_phase_shift_table(capsys):
    code, out, _ = run(
        ["phase-shift", "--mu", "0.8", "--a", "1.0", "--points", "5", "--ymin", "0.5", "--ymax", "2.5"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "y,delta"
    assert len(lines) == 7


def test_potential_command_and_svg(tmp_path, capsys):
    svg = tmp_path / "curve.svg"
    out_file = tmp_path / "curve.csv"
    code, _, _ = run(
        [
            "potential", "--mu", "0.8", "--a", "1.0", "--size", "10", "--points", "51",
            "--method", "2", "--out", str(out_file), "--svg", str(svg),
        ],
        capsys,
    )
    assert code == 0
    text = out_file.read_text()
    assert text.splitlines()[1] == "x,V,trusted"
    body = svg.read_text()
    assert body.startswith("<svg") and "polyline" in body


def test_potential_stability_scan_columns(capsys):
    code, out, _ = run(
        [
            "potential", "--mu", "0.8", "--a", "1.0", "--points", "21",
            "--scan-sizes", "5,10",
        ],
        capsys,
    )
    assert code == 0
    header = out.strip().splitlines()[1]
    assert header == "x,V_N5,V_N10,mask_N5,mask_N10"


def test_wavefunction_command(capsys):
    code, out, _ = run(
        ["wavefunction", "--mu", "0.8", "--a", "1.0", "--size", "15", "--energy", "0.05", "--points", "31"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert "truncation_tail=" in lines[0]
    assert lines[1] == "x,psi"


def test_verify_all_passes(capsys):
    code, out, _ = run(["verify", "--suite", "all"], capsys)
    assert code == 0
    assert "overall: PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--suite", "matrices", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] is True
    assert all("measured" in c for c in payload["checks"])


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("mu=0.8\na=1.0\nsize=4\nlambda=0.2\n")
    code, out, _ = run(
        ["matrix", "--what", "potential", "--mu", "0.8", "--a", "1.0", "--size", "3", "--config", str(cfg)],
        capsys,
    )
    assert code == 0
    # the explicit --size 3 wins over size=4 from the file
    assert out.strip().splitlines()[1] == "col0,col1,col2"


def test_spectrum_svg_levels(tmp_path, capsys):
    svg = tmp_path / "levels.svg"
    code, _, _ = run(
        [
            "spectrum", "--lambda", "0.2", "--mu", "-5", "--nu", "5.5", "--a", "5.5",
            "--b", "5.5", "--svg", str(svg),
        ],
        capsys,
    )
    assert code == 0
    assert svg.read_text().count("polyline") == 5
