import json
import subprocess
import sys

import jsonschema
import pytest

from ogradlab.cli import main
from ogradlab.report import load_schema


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_verify_t1_report_is_valid_and_flags_the_row(capsys):
    code, out = run(["verify-t1"], capsys)
    assert code == 0
    doc = json.loads(out.out)
    jsonschema.validate(doc, load_schema())
    checks = {c["name"]: c for c in doc["suites"][0]["checks"]}
    assert checks["strand_I_is_complex"]["status"] == "flagged"
    assert "(y, z, -x, y)" in checks["strand_I_is_complex"]["details"]["printed_row"]
    assert all("time" not in c and c["anchor"] for c in checks.values())


def test_repeated_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-invariants", "--out", str(a)]) == 0
    assert main(["verify-invariants", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_markdown_format(capsys):
    code, out = run(["verify-t1", "--format", "md"], capsys)
    assert code == 0
    assert out.out.startswith("# ogradlab report (pass)")
    assert "| strand_I_is_complex | flagged |" in out.out


def test_dumps_are_parseable(tmp_path, capsys):
    from ogradlab.exactalg import parse_system

    basis, pres = tmp_path / "basis.txt", tmp_path / "pres.txt"
    code, _ = run(["verify-model", "--dump-basis", str(basis)], capsys)
    assert code == 0
    code, _ = run(["verify-t1", "--dump-presentation", str(pres)], capsys)
    assert code == 0
    for path in (basis, pres):
        blocks = path.read_text().split("# ")[1:]
        parsed = {b.split("\n", 1)[0]: parse_system(b.split("\n", 1)[1])[1] for b in blocks}
        assert parsed and sum(len(v) for v in parsed.values()) > 0
    assert any(name.startswith("III_kernel") and not polys for name, polys in parsed.items())


def test_usage_errors_exit_2(tmp_path, capsys):
    assert main(["kuranishi", "run"]) == 2
    assert main(["kuranishi", "run", "--model", str(tmp_path / "nope.json")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("ring: x\nx^^2\n")
    assert main(["normal-cone", "run", "--system", str(bad)]) == 2
    assert main(["normal-cone", "run", "--fixture", "node", "--degree", "2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify-t1", "--prime", "7"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_failed_check_exits_1(tmp_path, capsys):
    # a system that starts in degree 2 but is obstructed at the first cubic level
    path = tmp_path / "obstructed.txt"
    path.write_text("ring: x, y\nx^2 + y^3\n")
    code, out = run(["normal-cone", "run", "--system", str(path), "--degree", "4"], capsys)
    doc = json.loads(out.out)
    assert code == 1 and doc["status"] == "fail"
    assert doc["suites"][0]["checks"][0]["details"]["obstruction"]["degree"] == 3


def test_run_actions(tmp_path, capsys):
    code, out = run(["kuranishi", "run", "--model", "cup", "--degree", "4"], capsys)
    assert code == 0
    details = json.loads(out.out)["suites"][0]["checks"][0]["details"]
    assert details["f"]["2"] == ["u1^2 + u1*u2"]
    path = tmp_path / "node.txt"
    path.write_text("ring: x, y\nx*y + x^3\n")
    code, _ = run(["normal-cone", "run", "--system", str(path), "--degree", "4"], capsys)
    assert code == 0
    code, _ = run(["normal-cone", "run", "--fixture", "node", "--timings"], capsys)
    assert code == 0


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ogradlab.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ogradlab ")
