import json
import math
import subprocess
import sys

import pytest

from sinebasis import __version__
from sinebasis.cli import build_parser, main, render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_free_particle(capsys):
    code, out, _ = run(capsys, "solve", "--potential", "zero", "--window", "-1", "1", "--basis", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "state,eigenvalue"
    vals = [float(l.split(",")[1]) for l in lines[1:]]
    assert vals == pytest.approx([math.pi ** 2 / 4, math.pi ** 2, 9 * math.pi ** 2 / 4], rel=1e-9)
    assert lines[1] == f"0,{math.pi ** 2 / 4:.10g}"


def test_nboson_delta(capsys):
    code, out, _ = run(capsys, "nboson", "--kind", "delta", "--c", "1", "--n", "3")
    assert code == 0
    header, row = out.splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert float(rec["E_L"]) == -0.5625
    assert float(rec["E_exact"]) == -0.5
    assert float(rec["E_U"]) == pytest.approx(-162 / (64 * math.pi ** 2), rel=1e-9)


def test_nboson_general_harmonic(capsys):
    code, out, _ = run(capsys, "nboson", "--kind", "general", "--potential", "harmonic", "--n", "2")
    assert code == 0
    rec = dict(zip(*[l.split(",") for l in out.splitlines()]))
    assert float(rec["E_U"]) == pytest.approx(1.606155742, abs=1e-8)
    assert rec["E_L"] == "" and rec["E_exact"] == ""


def test_radial_solve_and_optimize(capsys):
    code, out, _ = run(capsys, "solve", "--potential", "harmonic", "--dim", "3", "--ell", "1",
                       "--L", "6", "--basis", "40", "--states", "0")
    assert code == 0
    eps = float(out.splitlines()[1].split(",")[1])
    assert 5.0 <= eps < 5.001
    code, out, _ = run(capsys, "optimize", "--potential", "quartic_anharmonic", "--basis", "20",
                       "--range", "3", "4", "--states", "0", "1")
    assert code == 0
    rows = [l.split(",") for l in out.splitlines()[1:]]
    assert float(rows[0][3]) == pytest.approx(1.3923516415, abs=1e-9)
    assert float(rows[1][3]) == pytest.approx(4.6488127042, abs=1e-9)


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "--potential", "harmonic", "--basis", "20", "--range", "4", "5",
                       "--step", "0.5", "--states", "0", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "L,eps_0,eps_1"
    assert [l.split(",")[0] for l in lines[1:]] == ["4", "4.5", "5"]


@pytest.mark.parametrize("argv,field", [
    (["solve", "--potential", "harmonic", "--basis", "0", "--L", "3"], "basis"),
    (["solve", "--potential", "harmonic", "--dim", "2", "--ell", "0", "--L", "3"], "dim"),
    (["solve", "--potential", "nope", "--L", "3"], "potential"),
    (["solve", "--potential", "singular_ABC", "--params", "1", "1", "1", "--dim", "3",
      "--window", "0", "2"], "window"),
    (["solve", "--potential", "harmonic"], "L"),
    (["nboson", "--kind", "delta", "--n", "1"], "n"),
])
def test_config_errors_exit_2_and_name_field(capsys, argv, field):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert field in err


def test_argparse_errors_exit_2(capsys):
    code, _, _ = run(capsys, "solve", "--no-such-flag")
    assert code == 2
    code, _, _ = run(capsys, "repro", "table99")
    assert code == 2


def test_numeric_errors_exit_3(capsys):
    code, _, err = run(capsys, "solve", "--potential", "singular_ABC", "--params", "1", "1", "1",
                       "--dim", "3", "--window", "1e-80", "1", "--basis", "3")
    assert code == 3
    assert "not finite" in err
    code, _, err = run(capsys, "solve", "--potential", "sine_squared_confined", "--params", "5",
                       "--L", "1.5", "--basis", "25", "--nodes", "4", "--panels", "1")
    assert code == 3
    assert "node doubling" in err


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "solve", "--potential", "quartic_anharmonic", "--L", "3.4",
                       "--basis", "20", "--states", "0", "1", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, indent=2) + "\n" == out
    assert doc["meta"]["version"] == __version__
    assert doc["meta"]["N"] == 20
    assert "nodes_per_panel" in json.dumps(doc["meta"])
    assert doc["rows"][0]["eigenvalue"] == 1.392351642
    again = render(["state", "eigenvalue"], doc["rows"], doc["meta"], "json")
    assert again == out


def test_repro_byte_stable(capsys):
    first = run(capsys, "repro", "table6")
    second = run(capsys, "repro", "table6", "--jobs", "3")
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    lines = first[1].splitlines()
    assert len(lines) == 19
    assert "PASS" in first[2]


def test_repro_table1_rows(capsys):
    code, out, err = run(capsys, "repro", "table1", "--at-printed")
    assert code == 0
    assert len(out.splitlines()) == 1 + 12
    assert "max |delta|" in err


def test_repro_tolerance_failure_exit_1(capsys):
    # a tiny basis cannot meet the published accuracy
    code, out, err = run(capsys, "repro", "table6", "--basis", "6")
    assert code == 1
    assert "FAIL" in err
    assert ",false" in out


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("command = solve\npotential = zero\nwindow = -1 1\nbasis = 5\nstates = 0\n")
    code, out, _ = run(capsys, "--config", str(cfg))
    assert code == 0
    assert float(out.splitlines()[1].split(",")[1]) == pytest.approx(math.pi ** 2 / 4, rel=1e-9)
    code, out, _ = run(capsys, "--config", str(cfg), "solve", "--window", "0", "1")
    assert float(out.splitlines()[1].split(",")[1]) == pytest.approx(math.pi ** 2, rel=1e-9)
    table_first = tmp_path / "repro.cfg"
    table_first.write_text("table = table6\ncommand = repro\n")
    code, out, _ = run(capsys, "--config", str(table_first))
    assert code == 0 and len(out.splitlines()) == 19


def test_missing_config_file(capsys, tmp_path):
    code, _, err = run(capsys, "--config", str(tmp_path / "absent.cfg"))
    assert code == 2 and "config" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "solve", "--potential", "zero", "--window", "0", "1", "--basis", "2",
                       "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("state,eigenvalue\n")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sinebasis", "nboson", "--kind", "harmonic", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("kind,N,c,E_L,E_exact,E_U")


def test_parser_no_abbreviations():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["nboson", "--ki", "delta"])
