import subprocess
import sys
from pathlib import Path

import pytest

from adjcycles.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_diamond(capsys):
    code, out, _ = run(capsys, "check", DATA / "diamond.pgr")
    assert code == 1
    assert "witness (3,3)" in out
    assert out.endswith("result: non-member\n")


def test_check_member_with_cycle_counts(capsys):
    code, out, _ = run(capsys, "check", "--lmax", 10, DATA / "theta57.pgr")
    assert code == 0
    assert "cycles length 5 count 1\ncycles length 7 count 1\ncycles length 10 count 1\n" in out


def test_color_theta(capsys):
    from adjcycles import pgr
    from adjcycles.coloring import verify

    code, out, _ = run(capsys, "color", DATA / "theta57.pgr")
    assert code == 0
    colors = {int(a): int(b) for _, a, b in (line.split() for line in out.splitlines() if line.startswith("color "))}
    assert verify(pgr.load(DATA / "theta57.pgr"), colors)
    assert out.endswith("result: colored\n")


def test_color_non_member(capsys):
    code, out, err = run(capsys, "color", DATA / "k4.pgr")
    assert code == 1 and out == "result: error\n" and "adjacent" in err


def test_audit_k4(capsys):
    code, out, _ = run(capsys, "audit", DATA / "k4.pgr")
    assert code == 0
    assert out.startswith("initial-total 0\nfinal-total 0\nconserved yes\n")
    assert "transfer " not in out
    _, traced, _ = run(capsys, "audit", "--trace", DATA / "k4.pgr")
    assert "transfer R1 " in traced


def test_extend(capsys, tmp_path):
    code, out, _ = run(capsys, "extend", "--trace", "--precoloring", "1:1,2:2,3:3", DATA / "k4.pgr")
    assert code == 1  # K4 is not a member
    path = tmp_path / "c5.pgr"
    path.write_text("pgr 5 5\n1: 5 2\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4 1\nouter: 1 2\n")
    code, out, _ = run(capsys, "extend", "--precoloring", "1:1,2:2,3:1,4:2,5:3", path)
    assert code == 0
    assert out == "color 1 1\ncolor 2 2\ncolor 3 1\ncolor 4 2\ncolor 5 3\nresult: colored\n"
    code, _, err = run(capsys, "extend", "--precoloring", "1:1,2:1,3:2,4:1,5:3", path)
    assert code == 2 and "not proper" in err


def test_detect(capsys):
    code, out, _ = run(capsys, "detect", DATA / "cube.pgr")
    assert code == 1
    assert "P5 violated" in out and out.endswith("result: violations\n")


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", DATA / "theta57.pgr", DATA / "cube.pgr")
    assert code == 0
    assert out.startswith("# ")
    assert "DISAGREE" not in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.pgr"
    bad.write_text("pgr 2 1\n1: 1\n2: 1\nouter: 1 2\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and ":2:4:" in err
    code, _, err = run(capsys, "check", tmp_path / "missing.pgr")
    assert code == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, _ = run(capsys, "check", "--spec", tmp_path / "nope.txt", DATA / "k4.pgr")
    assert code == 2


def test_exit_code_is_worst_over_files(capsys):
    code, _, _ = run(capsys, "check", DATA / "theta57.pgr", DATA / "diamond.pgr")
    assert code == 1


def test_custom_spec_file(capsys, tmp_path):
    spec = tmp_path / "spec.txt"
    spec.write_text("4 4\n")
    code, out, _ = run(capsys, "check", "--spec", spec, DATA / "diamond.pgr")
    assert code == 0


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "-n", 9, "-m", 12, "--count", 3, "--seed", 7)[1]
    b = run(capsys, "gen", "-n", 9, "-m", 12, "--count", 3, "--seed", 7)[1]
    assert a == b and a.count("pgr 9 12") == 3


def test_gen_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--exhaustive", "-n", 5, "--members-only", "--out", tmp_path)
    assert code == 0
    rows = (tmp_path / "manifest.tsv").read_text().splitlines()
    assert len(rows) > 1 and all(r.split("\t")[3] == "1" for r in rows[1:])


def test_gen_bounds_error(capsys):
    code, _, err = run(capsys, "gen", "-n", 5, "-m", 20)
    assert code == 2 and "error" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "adjcycles", "check", str(DATA / "diamond.pgr")], capture_output=True, text=True
    )
    assert res.returncode == 1 and "witness (3,3)" in res.stdout


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_jobs_do_not_change_output(capsys, jobs):
    files = [DATA / n for n in ("cube.pgr", "diamond.pgr", "k4.pgr", "theta57.pgr")]
    code, out, _ = run(capsys, "audit", "--jobs", jobs, *files)
    serial = run(capsys, "audit", *files)[1]
    assert out == serial and code == 0
