from fractions import Fraction

import pytest

from orchard.configio import dump_json, load_configuration, parse_csv, parse_json, parse_scalar
from orchard.errors import ParseError


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-0.125", Fraction(-1, 8)), ("2/6", Fraction(1, 3)),
    (" 1e-3 ", Fraction(1, 1000)), ("-7/-2", Fraction(7, 2)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["abc", "1/0", "nan", "inf", "", "1/2/3"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_json_mixed_coordinates():
    c = parse_json('{"dimension": 2, "points": [[0, "1/3"], ["0.5", 2], [0.1, 7]]}')
    assert c.points == ((0, Fraction(1, 3)), (Fraction(1, 2), 2), (Fraction(1, 10), 7))


def test_json_error_lines():
    text = '{"dimension": 2,\n "points": [\n  [0, 0],\n  [1, "q"]\n]}'
    with pytest.raises(ParseError) as exc:
        parse_json(text)
    assert exc.value.line == 4
    with pytest.raises(ParseError) as exc:
        parse_json('{"dimension": 2,\n "points": [[0, 0],\n [0, 0]]}')
    assert exc.value.line == 3 and "repeats point 0" in str(exc.value)
    with pytest.raises(ParseError) as exc:
        parse_json('{"dimension": 2,\n "points": [[0, 0]\n [1, 1]]}')
    assert exc.value.line == 3


@pytest.mark.parametrize("text", [
    '[]', '{"dimension": 0, "points": [[1]]}', '{"dimension": 2, "points": [[1]]}',
    '{"dimension": 1, "points": []}', '{"dimension": 1, "points": [[true]]}',
])
def test_json_structure_errors(text):
    with pytest.raises(ParseError):
        parse_json(text)


def test_csv_with_and_without_header():
    a = parse_csv("x,y\n0,0\n1,0\n0,1\n")
    b = parse_csv("0,0\n1,0\n0,1\n")
    assert a == b and a.dimension == 2


def test_csv_errors():
    with pytest.raises(ParseError) as exc:
        parse_csv("0,0\n1,0\n1\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError) as exc:
        parse_csv("x,y\n0,0\n1,z\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError) as exc:
        parse_csv("0,0\n1,1\n0,0\n")
    assert exc.value.line == 3


def test_load_by_extension(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("1/2\n3\n")
    assert load_configuration(p).points == ((Fraction(1, 2),), (3,))
    q = tmp_path / "c.json"
    q.write_text(dump_json(load_configuration(p)))
    assert load_configuration(q) == load_configuration(p)
    with pytest.raises(ParseError):
        load_configuration(tmp_path / "missing.json")
