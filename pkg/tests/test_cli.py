import json
import subprocess
import sys
from pathlib import Path

import pytest

PKG = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "fanalg", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


@pytest.fixture()
def b32_file(tmp_path):
    f = tmp_path / "b32.json"
    f.write_text(json.dumps({"intersection": {"a": [3], "b": [2]}}))
    return str(f)


def test_examples_all_pass():
    for name in ("hb23", "phi0", "phii1", "phii2", "torito", "gorenstein", "conjecture"):
        r = run_cli("examples", name)
        assert r.returncode == 0, (name, r.stderr)
        payload = json.loads(r.stdout)
        assert payload["match"] is True and payload["diffs"] == []


def test_hilbert_from_stdin():
    spec = json.dumps({"rays": [[0, 1], [2, 3], [1, 0]]})
    r = run_cli("hilbert", "-", stdin=spec)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["M"] == 5
    assert payload["cones"][0]["basis"] == [[0, 1], [1, 2], [2, 3]]
    assert payload["cones"][1]["basis"] == [[2, 3], [1, 1], [1, 0]]


def test_present_b32(b32_file):
    r = run_cli("present", b32_file)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    texts = [rel["text"] for rel in payload["presentation"]["relations"]]
    assert "Y1*Y3 - Y2^2" in texts and "Y3*Y5 - Y4^3" in texts
    assert payload["groebner"]["ok"] and payload["minimality"]["ok"]


def test_present_torito_specialized(tmp_path):
    f = tmp_path / "torito.json"
    f.write_text(json.dumps({"intersection": {"a": [1, 3], "b": [3, 1]}}))
    r = run_cli("present", str(f), "--specialize", "p2=1")
    # a mathematically verified non-minimality is a finding, not a failure
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["minimality"]["ok"] is False
    assert payload["presentation"]["specialized_p"] == {"2": 1}


def test_resolve_with_m2_and_trials(b32_file, tmp_path):
    out = tmp_path / "cross.m2"
    r = run_cli("resolve", b32_file, "--trials", "3", "--emit-m2", str(out))
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["complex"]["ranks"] == [1, 6, 8, 3]
    assert payload["rank_certificate"]["ok"]
    assert "assert(got == expected);" in out.read_text()


def test_verify_command(b32_file):
    r = run_cli("verify", b32_file, "--trials", "2")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["kernel_oracle"]["ok"]
    assert payload["rank_certificate"]["ok"]
    assert payload["symbolic"]["ok"]


def test_output_is_deterministic(b32_file):
    a = run_cli("verify", b32_file, "--seed", "7")
    b = run_cli("verify", b32_file, "--seed", "7")
    assert a.stdout == b.stdout and a.returncode == b.returncode


def test_text_format(b32_file):
    r = run_cli("present", b32_file, "--format", "text")
    assert r.returncode == 0
    assert "Y1*Y3 - Y2^2" in r.stdout


def test_input_errors_exit_2(tmp_path):
    missing = run_cli("present", str(tmp_path / "nope.json"))
    assert missing.returncode == 2
    bad = run_cli("present", "-", stdin="{not json")
    assert bad.returncode == 2
    # full-plane support is rejected with an input error
    full = json.dumps({"rays": [[0, 1], [1, 0], [0, -1], [-1, 0]]})
    r = run_cli("present", "-", stdin=full)
    assert r.returncode == 2
    assert "half-plane" in r.stderr


def test_budget_exit_3(b32_file):
    r = run_cli("verify", b32_file, "--degree-bound", "5")
    assert r.returncode == 3


def test_invalid_family_rejected(tmp_path):
    # a family that is not subadditive: swapped forms on the b32 fan
    f = tmp_path / "bad.json"
    f.write_text(
        json.dumps({"rays": [[0, 1], [2, 3], [1, 0]], "functions": [[[3, 0], [0, 2]]]})
    )
    r = run_cli("present", str(f))
    assert r.returncode == 2  # rejected while building the presentation


def test_examples_mismatch_exits_1(monkeypatch):
    # corrupt one golden in-process: the diff must surface with exit code 1
    from fanalg import cli, goldens

    broken = dict(goldens.PHI0)
    broken["M"] = 6
    monkeypatch.setattr(goldens, "PHI0", broken)
    payload, code = cli.cmd_examples("phi0")
    assert code == 1
    assert any(d["field"] == "M" for d in payload["diffs"])
