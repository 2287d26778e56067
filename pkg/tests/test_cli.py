"""CLI surface: commands, formats, exit codes, determinism."""

import json

from galcalc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_modg_text(capsys):
    code, out, _ = run_cli(capsys, "modg", "Q8", "-p", "2")
    assert code == 0
    assert out.strip() == "C2 x C2 (order 4)"


def test_stmod_text(capsys):
    code, out, _ = run_cli(capsys, "stmod", "S3", "-p", "3")
    assert code == 0
    assert "identified C2" in out
    assert "StmodWeylRankOne: agreed" in out


def test_stmod_json_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "stmod", "S3", "-p", "3", "--format", "json")
    assert code == 0
    code, out2, _ = run_cli(capsys, "stmod", "S3", "-p", "3", "--format", "json")
    assert out1 == out2  # byte-deterministic
    data = json.loads(out1)
    assert data["schema"] == 1
    assert data["result"]["identification"]["match"]["name"] == "C2"
    assert [c["path"] for c in data["cross_checks"]]


def test_cochains(capsys):
    code, out, _ = run_cli(capsys, "cochains", "C6", "-p", "2")
    assert code == 0
    assert "C1" in out or "order 1" in out


def test_hom_command(capsys):
    code, out, _ = run_cli(capsys, "hom", "C2", "S3")
    assert code == 0
    assert "components: 2" in out
    assert "order 6" in out and "order 2" in out


def test_hom_json(capsys):
    code, out, _ = run_cli(capsys, "hom", "C2", "S3", "--format", "json")
    data = json.loads(out)
    orders = sorted(c["automorphisms"]["order"] for c in data["components"])
    assert orders == [2, 6]


def test_torsors_command(capsys):
    code, out, _ = run_cli(capsys, "torsors", "C2", "S3")
    assert code == 0
    assert out.startswith("2 isomorphism classes")


def test_orbit_nerve_command(capsys):
    code, out, _ = run_cli(capsys, "orbit-nerve", "S3", "-p", "3")
    assert code == 0
    assert "1 objects" in out
    assert "fp:1:aa" in out


def test_stone_command(tmp_path, capsys):
    f = tmp_path / "algebra.json"
    f.write_text(json.dumps({"atoms": ["x", "y", "z"]}))
    code, out, _ = run_cli(capsys, "stone", str(f))
    assert code == 0
    assert "8 elements, 3 atoms, 5 idempotent decompositions" in out


def test_stone_tables_file(tmp_path, capsys):
    payload = {
        "size": 2,
        "meet": [[0, 0], [0, 1]],
        "join": [[0, 1], [1, 1]],
        "complement": [1, 0],
        "bottom": 0,
        "top": 1,
    }
    f = tmp_path / "two.json"
    f.write_text(json.dumps(payload))
    code, out, _ = run_cli(capsys, "stone", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out)["atom_count"] == 1


def test_pushout_command(capsys):
    code, out, _ = run_cli(capsys, "pushout", "fp:1:", "fp:1:", "fp:0:", "aa", "1")
    assert code == 0
    assert "identified C2" in out
    assert "[2]" in out


def test_exit_code_parse_error(capsys):
    code, _, err = run_cli(capsys, "modg", "NOPE", "-p", "2")
    assert code == 2
    assert "error:" in err


def test_exit_code_p_order(capsys):
    code, _, err = run_cli(capsys, "stmod", "C5", "-p", "3")
    assert code == 2
    assert "stable module category is zero" in err


def test_exit_code_size(capsys):
    code, _, err = run_cli(capsys, "modg", "S8", "-p", "2")
    assert code == 3


def test_max_order_flag(capsys):
    code, _, err = run_cli(capsys, "modg", "S5", "-p", "2", "--max-order", "50")
    assert code == 3


def test_max_order_env(capsys, monkeypatch):
    monkeypatch.setenv("GALOIS_MAX_ORDER", "50")
    code, _, _ = run_cli(capsys, "modg", "S5", "-p", "2")
    assert code == 3
    monkeypatch.setenv("GALOIS_MAX_ORDER", "200")
    code, _, _ = run_cli(capsys, "modg", "S5", "-p", "2")
    assert code == 0


def test_require_identified(capsys):
    # S3 at 3 identifies, so the flag passes
    code, _, _ = run_cli(capsys, "stmod", "S3", "-p", "3", "--require-identified")
    assert code == 0


def test_require_identified_inconclusive_exits_4(capsys):
    # gluing two copies of Z over a trivially-mapped corner leaves a free
    # group: coset enumeration cannot certify, so identification is
    # inconclusive and the flag demands exit 4
    code, out, _ = run_cli(
        capsys, "pushout", "fp:1:", "fp:1:", "fp:1:", "1", "1",
        "--max-cosets", "200", "--require-identified",
    )
    assert code == 4
    assert "Inconclusive" in out


def test_usage_error_missing_prime(capsys):
    code = main(["modg", "S3"])
    assert code == 2


def test_selftest_command(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert out.count("ok ") == 7
    assert "FAIL" not in out


def test_json_deterministic_across_processes():
    # byte-identical output under different hash seeds
    import os
    import subprocess
    import sys

    outputs = []
    for seed in ("1", "271828"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, "-m", "galcalc.cli", "stmod", "S4", "-p", "2",
             "--format", "json"],
            capture_output=True, env=env, check=True,
        )
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
