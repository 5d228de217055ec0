import json
import subprocess
import sys

import pytest

from minorls.cli import run
from minorls.division import parse_division
from minorls.graph import read_graph


def _run(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def grid_file(tmp_path, capsys):
    path = tmp_path / "g.el"
    assert _run(capsys, "gen", "--family", "grid", "--rows", 4, "--cols", 4, "-o", path)[0] == 0
    return path


def test_gen_grid(grid_file):
    g = read_graph(grid_file)
    assert (g.n, g.m) == (16, 24)
    assert grid_file.read_text().startswith("# grid rows=4 cols=4 seed=0\n")


def test_gen_echoes_seed(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "subgrid-random", "--rows", 3, "--cols", 3, "--p", 0.3, "--seed", 9)
    assert code == 0 and "seed=9" in out.splitlines()[0]


def test_pipeline(grid_file, tmp_path, capsys):
    before = grid_file.read_bytes()

    code, out, _ = _run(capsys, "solve", "--problem", "is", "--graph", grid_file, "--r", 2)
    assert code == 0
    assert "# size: " in out

    sol = tmp_path / "u.txt"
    trace = tmp_path / "trace.json"
    assert _run(capsys, "solve", "--problem", "vc", "--graph", grid_file, "--r", 2, "-o", sol, "--trace", trace)[0] == 0
    steps = json.loads(trace.read_text())
    assert steps["termination"] == "local-optimum" and steps["r"] == 2
    code, out, _ = _run(capsys, "verify", "--graph", grid_file, "--problem", "vc", "--solution", sol, "--r", 2)
    assert code == 0 and "locally_optimal(r=2): True" in out

    div = tmp_path / "d.txt"
    assert _run(capsys, "divide", "--graph", grid_file, "--r", 6, "--h", 5, "--strategy", "bfs-layer", "-o", div)[0] == 0
    assert max(len(p) for p in parse_division(div.read_text()).pieces) <= 6
    code, out, _ = _run(capsys, "verify", "--graph", grid_file, "--division", div)
    assert code == 0 and "passed: True" in out

    code, out, _ = _run(capsys, "exact", "--problem", "ds", "--graph", grid_file)
    assert code == 0 and "# size: 4" in out

    assert grid_file.read_bytes() == before


def test_json_output(grid_file, capsys):
    code, out, _ = _run(capsys, "solve", "--problem", "ds", "--graph", grid_file, "--r", 1, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["size"] == len(data["solution"])


def test_verify_reports_failures(grid_file, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n")
    code, out, _ = _run(capsys, "verify", "--graph", grid_file, "--division", bad)
    assert code == 1 and "passed: False" in out

    code, out, _ = _run(capsys, "verify", "--graph", grid_file, "--problem", "vc", "--solution", bad, "--r", 1)
    assert code == 1 and "feasible: False" in out

    everything = tmp_path / "all.txt"
    everything.write_text(" ".join(map(str, range(16))) + "\n")
    code, out, _ = _run(capsys, "verify", "--graph", grid_file, "--problem", "vc", "--solution", everything, "--r", 1)
    assert code == 1 and "locally_optimal(r=1): False" in out


def test_errors_exit_nonzero(grid_file, tmp_path, capsys):
    code, _, err = _run(capsys, "solve", "--problem", "is", "--graph", grid_file, "--r", 2, "--eps", 0.5)
    assert code == 2 and "either --r or --eps" in err

    code, _, err = _run(capsys, "solve", "--problem", "is", "--graph", tmp_path / "missing.el", "--r", 2)
    assert code == 2 and err.startswith("error:")

    dup = tmp_path / "dup.el"
    dup.write_text("0 1\n1 0\n")
    code, _, err = _run(capsys, "solve", "--problem", "is", "--graph", dup, "--r", 2)
    assert code == 2 and "line 2" in err and "duplicate" in err

    code, _, err = _run(capsys, "exact", "--problem", "is", "--graph", grid_file, "--cap", 10)
    assert code == 2 and "cap" in err

    with pytest.raises(SystemExit) as info:
        run(["solve", "--problem", "clique", "--graph", str(grid_file), "--r", "1"])
    assert info.value.code != 0


def test_eps_route(grid_file, capsys):
    # eps = 1 with h = 2 still maps to a radius far above n, so this is a full-radius search
    code, out, _ = _run(capsys, "solve", "--problem", "vc", "--graph", grid_file, "--eps", 1, "--h", 2)
    assert code == 0 and "# size: 8" in out and "r=663552" in out  # 4 * 144**2 * 2**3


def test_analyze(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# tiny corpus\ncycle size=5\nsubgrid-random rows=3 cols=4 p=0.3 seed=2\n")
    report = tmp_path / "report.txt"
    code, _, _ = _run(capsys, "analyze", "--corpus", corpus, "--problem", "is", "--r", 2, "-o", report, "--threads", 2)
    assert code == 0
    text = report.read_text()
    assert text.count("[instance") == 2 and "worst_ratio" in text


def test_console_entry_point(grid_file):
    proc = subprocess.run([sys.executable, "-m", "minorls.cli", "exact", "--problem", "is", "--graph", str(grid_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "# size: 8" in proc.stdout
