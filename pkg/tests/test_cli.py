import json

import pytest

from orchard.cli import main, split_histogram
from orchard.cochain import TwoPartition
from orchard.configio import load_configuration
from orchard.geometry import orchard_coloring


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def square(tmp_path):
    return write(tmp_path, "square.json", '{"dimension": 2, "points": [[0,0],[1,0],[1,1],[0,1]]}')


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_json(square, capsys):
    code, out, _ = run(capsys, "color", square, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"class_of_0": [0, 2], "other": [1, 3]}


def test_color_json_round_trip(square, capsys):
    _, out, _ = run(capsys, "color", square, "--format", "json")
    assert TwoPartition.from_json(json.loads(out)) == orchard_coloring(load_configuration(square)).partition


def test_color_text_alternates(tmp_path, capsys):
    path = write(tmp_path, "line.csv", "x\n0\n1\n2\n3\n4\n")
    code, out, _ = run(capsys, "color", path)
    assert code == 0
    assert out.splitlines()[1:] == ["0 A", "1 B", "2 A", "3 B", "4 A"]


def test_color_non_generic(tmp_path, capsys):
    path = write(tmp_path, "col.json", '{"dimension": 2, "points": [[0,0],[1,0],[2,0]]}')
    code, _, err = run(capsys, "color", path)
    assert code == 3
    assert "[0, 1, 2]" in err
    code, out, _ = run(capsys, "check", path)
    assert code == 3 and "[0, 1, 2]" in out


def test_parse_error_exit(tmp_path, capsys):
    path = write(tmp_path, "bad.json", '{"dimension": 2,\n"points": [[0,0],\n[1,"x"]]}')
    code, _, err = run(capsys, "color", path)
    assert code == 2 and "line 3" in err


def test_svg_requires_plane(tmp_path, capsys):
    path = write(tmp_path, "line.csv", "0\n1\n2\n")
    code, _, err = run(capsys, "color", path, "--format", "svg")
    assert code == 2 and "d = 2" in err


def test_svg_output(square, capsys):
    code, out, _ = run(capsys, "color", square, "--format", "svg", "--lines")
    assert code == 0
    assert out.startswith("<?xml") and out.count("<circle") == 4 and out.count("<line") == 6
    assert out.count('fill="#6a1b9a"') == 2 and out.count('fill="#c62828"') == 2


def test_max_n_budget(square, capsys):
    code, _, _ = run(capsys, "color", square, "--max-n", "3")
    assert code == 4


def test_check_generic(square, capsys):
    code, out, _ = run(capsys, "check", square, "--format", "json")
    assert code == 0 and json.loads(out) == {"generic": True, "witness": None}


def test_cocycle_json(square, capsys):
    code, out, _ = run(capsys, "cocycle", square, "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["n"] == 4 and rec["l"] == 3 and rec["kind"] == "antisymmetric"
    assert rec["prefactor"] == -1
    assert len(rec["cocycle"]) == 6
    assert rec["partition"] == {"class_of_0": [0, 2], "other": [1, 3]}


def test_stats_four_points():
    hist = split_histogram(4, 2, 300, seed=3)
    assert hist["0+4"] == 0
    assert hist["1+3"] > 0 and hist["2+2"] > 0
    assert sum(hist.values()) == 300


@pytest.mark.parametrize("d", [1, 2, 3])
def test_stats_simplex_always_trivial(d):
    hist = split_histogram(d + 1, d, 50, seed=1)
    assert hist[f"0+{d + 1}"] == 50


def test_stats_box_budget(capsys):
    code, _, _ = run(capsys, "stats", "--n", "5", "--box", "3")
    assert code == 4


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "3", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [(r["n"], r["l"]) for r in rows] == [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]
    by = {(r["n"], r["l"]): r for r in rows}
    assert by[(3, 3)]["solution_dimension"] == 0
    assert by[(2, 2)]["exotic_detected"] is True
    assert by[(3, 2)]["solution_dimension"] == 1
    code, _, _ = run(capsys, "verify", "--n-max", "7")
    assert code == 4


def test_determinism(square, tmp_path, capsys):
    commands = [
        ("color", square, "--format", "svg", "--lines"),
        ("color", square, "--format", "json"),
        ("cocycle", square),
        ("check", square),
        ("stats", "--n", "6", "--trials", "40", "--seed", "9", "--format", "json"),
        ("verify", "--n-max", "4"),
    ]
    for argv in commands:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
