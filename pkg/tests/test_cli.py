import json
import re
import subprocess
import sys

import pytest

from tonnetz.cli import main
from tonnetz.core import load_tonnetz, loads_complex


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, json.loads(capsys.readouterr().out)


def test_build(tmp_path, capsys):
    out = tmp_path / "t.txt"
    code, rep = run(capsys, "build", 12, 3, 3, 4, 5, "-o", out)
    assert code == 0 and rep["result"]["facets"] == 24
    assert set(rep) == {"command", "input", "result", "timing_ms"}
    assert len(load_tonnetz(out.read_text()).facets) == 24
    code, rep = run(capsys, "build", 7, 3, 1, 2, 4, "-o", tmp_path / "u.txt")
    assert rep["result"]["facets"] == 14


def test_build_rejects(tmp_path, capsys):
    code, rep = run(capsys, "build", 6, 3, 1, 2, 3, "-o", tmp_path / "x.txt")
    assert code == 2 and rep["error"]["reason"] == "not generic"
    code, rep = run(capsys, "build", 6, 3, 1, 2, 3, "--permissive", "-o", tmp_path / "x.txt")
    assert code == 0 and rep["result"]["facets"] == 12
    code, rep = run(capsys, "build", 13, 3, 3, 4, 5)
    assert code == 2 and rep["error"]["reason"] == "sum mismatch"


def test_analyze(capsys):
    code, rep = run(capsys, "analyze", 12, 3, 3, 4, 5)
    r = rep["result"]
    assert (r["betti"], r["pairing_determinant"], r["systole2"], r["main_theorem"]) == ([1, 2, 1], 432, 9, True)
    assert r["lambda_L"]["index"] == 12
    assert run(capsys, "analyze", 12, 3, 2, 3, 7)[1]["result"]["systole2"] == 7
    r = run(capsys, "analyze", 15, 4, 1, 2, 4, 8)[1]["result"]
    assert r["betti"] == [1, 3, 3, 1] and r["systole2"] == "19/3"
    r = run(capsys, "analyze", 12, 3, 3, 4, 5, "--no-oracle")[1]["result"]
    assert "betti" not in r


def test_reports_have_no_floats(capsys):
    for argv in (("analyze", 12, 3, 2, 3, 7), ("classify", 12, 3)):
        _, rep = run(capsys, *argv)

        def walk(x):
            if isinstance(x, dict):
                x = list(x.values())
            if isinstance(x, list):
                for y in x:
                    walk(y)
            else:
                assert not isinstance(x, float)

        walk(rep["result"])


def _labels(svg):
    return {
        (int(r), int(c)): int(v)
        for r, c, v in re.findall(r'<text data-r="(\d+)" data-c="(\d+)"[^>]*>(\d+)</text>', svg)
    }


def test_render_label_patterns(tmp_path, capsys):
    out = tmp_path / "a.svg"
    run(capsys, "render", 12, 3, 3, 4, 5, "--rows", 3, "--cols", 3, "--origin", 1, "-o", out)
    lab = _labels(out.read_text())
    assert [lab[0, c] for c in range(4)] == [1, 4, 7, 10]
    assert [lab[1, c] for c in range(4)] == [9, 0, 3, 6]
    assert [lab[2, c] for c in range(4)] == [5, 8, 11, 2]
    # (1,2,9) unfolded from a top-left vertex labelled 5
    run(capsys, "render", 12, 3, 1, 2, 9, "--rows", 1, "--cols", 3, "--origin", 5, "-o", out)
    lab = _labels(out.read_text())
    assert [lab[0, c] for c in range(4)] == [5, 6, 7, 8]
    assert [lab[1, c] for c in range(4)] == [3, 4, 5, 6]


def test_render_window_and_single_cell(tmp_path, capsys):
    out = tmp_path / "w.svg"
    run(capsys, "render", 12, 3, 3, 4, 5, "--rows", 3, "--cols", 4, "-o", out)
    lab = _labels(out.read_text())
    window = sorted(v for (r, c), v in lab.items() if r < 3 and c < 4)
    assert window == list(range(12))
    run(capsys, "render", 12, 3, 3, 4, 5, "--rows", 1, "--cols", 1, "-o", out)
    svg = out.read_text()
    assert svg.count("<polygon data-labels") == 2 and len(_labels(svg)) == 4
    assert 'class="fundamental-domain"' in svg


def test_render_rejects_k4(tmp_path, capsys):
    code, rep = run(capsys, "render", 15, 4, 1, 2, 4, 8, "-o", tmp_path / "x.svg")
    assert code == 2 and rep["error"]["reason"] == "unsupported k"


def test_classify(capsys):
    _, rep = run(capsys, "classify", 12, 3)
    members = [c["members"] for c in rep["result"]["classes"]]
    assert sorted(sum(members, [])) == [[1, 2, 9], [1, 3, 8], [1, 4, 7], [2, 3, 7], [3, 4, 5]]
    assert [1, 2, 9] in next(m for m in members if [2, 3, 7] in m)
    assert [2, 3, 7] not in next(m for m in members if [3, 4, 5] in m)
    _, rep = run(capsys, "classify", 7, 3)
    assert [c["members"] for c in rep["result"]["classes"]] == [[[1, 2, 4]]]


@pytest.mark.parametrize("k,r,cells", [(3, 0, 0), (3, 1, 6), (4, 1, 24)])
def test_irrational(tmp_path, capsys, k, r, cells):
    out = tmp_path / "p.txt"
    _, rep = run(capsys, "irrational", k, r, "-o", out)
    assert rep["result"]["cells"] == cells
    header, facets = loads_complex(out.read_text())
    assert header == ["irrational", str(k), str(r)]
    if r == 0:
        assert rep["result"]["vertices"] == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "tonnetz", "build", "6", "3", "1", "2", "3", "-o", str(tmp_path / "x")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["error"]["reason"] == "not generic"
