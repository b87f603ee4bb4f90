"""Command line contract: golden outputs, exit codes, JSON shape, reproducibility."""

import contextlib
import io
import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from dualquat.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(argv, stdin_text=None):
    """Invoke main() in process, returning (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:  # argparse usage failures
                code = exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


GOLDEN_JOBS = [
    ("magnitude_unit.txt", ["magnitude", "scalar_unit.dq"], 0),
    ("magnitude_infinitesimal.txt", ["magnitude", "scalar_infinitesimal.dq"], 0),
    ("magnitude_worked.json", ["magnitude", "--format", "json", "scalar_worked.dq"], 0),
    ("norms_pair.txt", ["norms", "vector_pair.dq"], 0),
    ("norms_infinitesimal.txt", ["norms", "vector_infinitesimal.dq"], 0),
    ("norms_embed.json", ["norms", "--format", "json", "vector_embed.dq"], 0),
    ("unit_scalar_pass.txt", ["check-unit", "scalar_unit.dq"], 0),
    ("unit_scalar_fail.txt", ["check-unit", "scalar_drift.dq"], 1),
    ("unit_vector_pass.json", ["check-unit", "--format", "json", "vector_unit.dq"], 0),
    ("orthonormal_pass.txt", ["check-orthonormal", "basis_pass.dq"], 0),
    ("orthonormal_fail.txt", ["check-orthonormal", "basis_fail.dq"], 1),
    ("selfcheck_small.txt", ["selfcheck", "--seed", "7", "--cases", "25"], 0),
]


@pytest.mark.parametrize("golden_name,argv,want_code", GOLDEN_JOBS, ids=[j[0] for j in GOLDEN_JOBS])
def test_golden_output(golden_name, argv, want_code):
    argv = [str(DATA / a) if a.endswith(".dq") else a for a in argv]
    code, out, err = run(argv)
    assert code == want_code
    assert err == ""
    assert out == (GOLDEN / golden_name).read_text()


@pytest.mark.parametrize("golden_name", ["magnitude_worked.json", "norms_embed.json", "unit_vector_pass.json"])
def test_json_outputs_round_trip(golden_name):
    text = (GOLDEN / golden_name).read_text()
    payload = json.loads(text)
    assert list(payload) == ["command", "inputs", "results", "pass"]
    assert json.dumps(payload, indent=2) + "\n" == text


def test_json_dual_number_shape():
    payload = json.loads((GOLDEN / "magnitude_worked.json").read_text())
    magnitude = payload["results"]["magnitude"]
    assert list(magnitude) == ["std", "inf"]
    assert isinstance(magnitude["std"], float)


def test_reads_stdin_dash():
    doc = (DATA / "scalar_unit.dq").read_text()
    code, out, err = run(["magnitude", "-"], stdin_text=doc)
    assert code == 0
    assert out == (GOLDEN / "magnitude_unit.txt").read_text()


def test_tolerance_flag_loosens_unit_check():
    code, out, _ = run(["check-unit", "--tol", "3", str(DATA / "scalar_drift.dq")])
    assert code == 0
    assert "pass: yes" in out


def test_selfcheck_is_reproducible():
    first = run(["selfcheck", "--seed", "7", "--cases", "25"])
    second = run(["selfcheck", "--seed", "7", "--cases", "25"])
    assert first == second
    assert first[0] == 0


def test_selfcheck_seed_changes_residuals():
    _, out_a, _ = run(["selfcheck", "--seed", "1", "--cases", "25"])
    _, out_b, _ = run(["selfcheck", "--seed", "2", "--cases", "25"])
    assert out_a != out_b


def test_selfcheck_json_lists_all_suites():
    from dualquat.selfcheck import suite_names

    code, out, _ = run(["selfcheck", "--seed", "7", "--cases", "10", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert [s["name"] for s in payload["results"]["suites"]] == list(suite_names())
    assert payload["pass"] is True


# -- failure exits ---------------------------------------------------------------

def test_parse_error_exits_2_with_location():
    code, out, err = run(["magnitude", str(DATA / "broken.dq")])
    assert code == 2
    assert out == ""
    assert err.startswith("dualq: error: ")
    assert "broken.dq" in err
    assert "line 1" in err


def test_missing_file_exits_2():
    code, out, err = run(["magnitude", str(DATA / "no_such_file.dq")])
    assert code == 2
    assert "cannot read input" in err


def test_kind_mismatch_exits_2():
    code, _, err = run(["norms", str(DATA / "scalar_unit.dq")])
    assert code == 2
    assert "dualq: error:" in err
    code, _, err = run(["magnitude", str(DATA / "vector_pair.dq")])
    assert code == 2
    code, _, err = run(["check-orthonormal", str(DATA / "vector_pair.dq")])
    assert code == 2


def test_check_unit_accepts_scalar_and_vector_only():
    code, _, err = run(["check-unit", str(DATA / "basis_pass.dq")])
    assert code == 2


def test_bad_flag_values_exit_2():
    for argv in (
        ["check-unit", "--tol", "-1", str(DATA / "scalar_unit.dq")],
        ["selfcheck", "--cases", "0"],
        ["selfcheck", "--seed", "-3"],
        ["selfcheck", "--seed", str(2**64)],
        ["magnitude", "--format", "yaml", str(DATA / "scalar_unit.dq")],
    ):
        code, _, err = run(argv)
        assert code == 2, argv
        assert err != ""


def test_unknown_command_exits_2():
    code, _, err = run(["frobnicate", "x.dq"])
    assert code == 2


@pytest.mark.skipif(shutil.which("dualq") is None, reason="entry point not on PATH")
def test_installed_entry_point():
    proc = subprocess.run(
        ["dualq", "magnitude", str(DATA / "scalar_unit.dq")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "magnitude_unit.txt").read_text()
