import subprocess
import sys

import pytest

from liec.cli import run
from liec.coloring import format_coloring, monochromatic
from liec.generators import gen_bowtie
from liec.graph import format_edge_list


@pytest.fixture
def files(tmp_path):
    bowtie = tmp_path / "bowtie.txt"
    bowtie.write_text(format_edge_list(gen_bowtie()))
    k3 = tmp_path / "k3.txt"
    k3.write_text("0 1\n1 2\n0 2\n")
    bad = tmp_path / "bad.col"
    bad.write_text(format_coloring(monochromatic(gen_bowtie())))
    return tmp_path, str(bowtie), str(k3), str(bad)


def test_solve_bowtie(files, capsys):
    tmp, bowtie, _, _ = files
    out = tmp / "b.col"
    assert run(["solve", bowtie, "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "4 colors"
    assert run(["verify", bowtie, str(out)]) == 0
    assert capsys.readouterr().out == "VALID\n"


def test_solve_to_stdout_is_parseable(files, capsys, tmp_path):
    _, bowtie, _, _ = files
    assert run(["solve", bowtie]) == 0
    text = capsys.readouterr().out
    assert text.startswith("# 4 colors\n")
    col = tmp_path / "x.col"
    col.write_text(text)
    assert run(["verify", bowtie, str(col)]) == 0
    assert capsys.readouterr().out == "VALID\n"


def test_solve_noncolorable(files, capsys):
    _, _, k3, _ = files
    assert run(["solve", k3]) == 1
    assert "OddCycle" in capsys.readouterr().out


def test_classify_k3(files, capsys):
    _, _, k3, _ = files
    assert run(["classify", k3]) == 0
    assert capsys.readouterr().out == "OddCycle\n"


def test_classify_prints_witness(tmp_path, capsys):
    g = tmp_path / "t.txt"
    g.write_text("0 1\n1 2\n0 2\n2 3\n3 4\n")
    assert run(["classify", str(g)]) == 0
    assert capsys.readouterr().out.splitlines() == ["TFamily", "triangle 0 1 2", "pendant 2 3 4"]


def test_verify_monochromatic_bowtie(files, capsys):
    _, bowtie, _, bad = files
    assert run(["verify", bowtie, bad]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "INVALID"
    assert lines[1:] == ["0 1 1", "2 3 1", "4 5 1", "6 7 1", "8 9 1"]


def test_exact(files, capsys):
    _, bowtie, k3, _ = files
    assert run(["exact", bowtie, "--kmax", "4"]) == 0
    assert capsys.readouterr().out == "4\n"
    assert run(["exact", k3, "--kmax", "5"]) == 0
    assert capsys.readouterr().out == "NONE\n"
    assert run(["exact", bowtie, "--max-edges", "5"]) == 2


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (a, b):
        assert run(["gen", "cactus", "--n", "25", "--cycles", "4", "--seed", "3", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert run(["gen", "cactus", "--n", "25", "--cycles", "4", "--seed", "3", "--out", str(a)]) == 2
    assert "--force" in capsys.readouterr().err
    assert run(["gen", "tmember", "--steps", "3", "--out", str(a), "--force"]) == 0


def test_export_dot(files, capsys, tmp_path):
    _, bowtie, _, bad = files
    assert run(["export-dot", bowtie, bad]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph G {") and dot.count("--") == 13 and 'label="1"' in dot
    assert run(["export-dot", bowtie]) == 0
    assert "color=" not in capsys.readouterr().out


@pytest.mark.parametrize("text", ["0 0\n", "0 1\n0 1\n", "x y\n"])
def test_invalid_input(tmp_path, capsys, text):
    g = tmp_path / "g.txt"
    g.write_text(text)
    assert run(["solve", str(g)]) == 2
    assert "line" in capsys.readouterr().err


def test_missing_file_and_bad_usage(capsys):
    assert run(["solve", "/nonexistent/graph.txt"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["exact"]) == 2


def test_non_cactus_rejected(tmp_path):
    g = tmp_path / "k4.txt"
    g.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run(["solve", str(g)]) == 2


def test_internal_bug_exit_code(files, monkeypatch):
    from liec import cli
    from liec.errors import SolverBug

    def broken(g):
        raise SolverBug("boom")
    monkeypatch.setattr(cli, "cactus_liec", broken)
    _, bowtie, _, _ = files
    assert run(["solve", bowtie]) == 3


def test_batch_solve_with_jobs(files, capsys):
    tmp, bowtie, k3, _ = files
    assert run(["solve", bowtie, k3, "--jobs", "2"]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out == [f"{bowtie}: 4 colors", f"{k3}: not colorable: OddCycle"]
    assert (tmp / "bowtie.txt.col").exists()


def test_module_entry_point(files):
    _, bowtie, _, _ = files
    proc = subprocess.run([sys.executable, "-m", "liec", "classify", bowtie],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Colorable\n"
