from pathlib import Path

import pytest

from twobridge.catalog import HEADER, fibered_generators, generator_verdicts, load_catalog
from twobridge.errors import ParseError, ValidationError
from twobridge.obstructions import Outcome

GOOD_ROW = "6_3,twobridge,13/5,1;-3;5;-3;1,2,0,test"


def write(tmp_path: Path, *rows: str, header: str = ",".join(HEADER)) -> Path:
    path = tmp_path / "catalog.csv"
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")
    return path


def test_default_catalog():
    entries = load_catalog()
    assert len(entries) == 8
    assert {e.name for e in fibered_generators(entries)} == {"6_3", "7_7", "8_12", "3_1#3_1*", "4_1#4_1"}
    verdicts = generator_verdicts(entries)
    assert len(verdicts) == 5
    assert all(o is Outcome.EXCLUDES for _, o in verdicts)
    assert {e.name for e in entries if not e.fibered} == {"9_41", "10_58", "12a_1202"}


def test_environment_override(tmp_path, monkeypatch):
    monkeypatch.setenv("TBK_CATALOG", str(write(tmp_path, GOOD_ROW)))
    entries = load_catalog()
    assert [e.name for e in entries] == ["6_3"]
    assert generator_verdicts() == [("6_3", Outcome.EXCLUDES)]


def test_blank_lines_are_skipped(tmp_path):
    assert len(load_catalog(write(tmp_path, "", GOOD_ROW, ""))) == 1


@pytest.mark.parametrize("rows, header, line, fragment", [
    ((), "name,kind", 1, "header"),
    (("6_3,twobridge,13/5,1;-3;5;-3;1,2,0",), None, 2, "columns"),
    (("6_3,knot,13/5,1;-3;5;-3;1,2,0,x",), None, 2, "unknown kind"),
    ((GOOD_ROW, "x,table,,1;-3;5;-3,2,0,x"), None, 3, "odd length"),
    (("x,table,,1;a;1,1,0,x",), None, 2, "coefficient"),
    (("x,table,,1;-1;1,one,0,x",), None, 2, "genus"),
    (("x,table,,,1,0,x",), None, 2, "empty"),
    ((GOOD_ROW, GOOD_ROW), None, 3, "duplicate"),
])
def test_parse_errors(tmp_path, rows, header, line, fragment):
    path = write(tmp_path, *rows, header=header or ",".join(HEADER))
    with pytest.raises(ParseError) as exc:
        load_catalog(path)
    assert exc.value.line == line
    assert fragment in str(exc.value) and str(exc.value).startswith(f"line {line}:")


def test_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    with pytest.raises(ParseError):
        load_catalog(path)


@pytest.mark.parametrize("row, fragment", [
    ("x,table,,1;-2;1,1,0,x", "at t = 1"),
    ("x,table,,2;-1;0,1,0,x", "symmetric"),
    ("x,table,,1;-3;5;-3;1,1,0,x", "genus"),
    ("x,twobridge,12/5,1;-3;5;-3;1,2,0,x", "bad two-bridge"),
    ("x,twobridge,21/8,1;-3;5;-3;1,2,0,x", "differs from b(21,8)"),
    ("x,twobridge,13/5,1;-3;5;-3;1,2,2,x", "signature"),
    ("x,sum,3_1:9_9,1;-2;3;-2;1,2,0,x", "unknown summand"),
    ("x,sum,3_1:4_1,1;-2;3;-2;1,2,0,x", "product"),
    ("x,sum,3_1:3_1,1;-2;3;-2;1,2,0,x", "sum -4"),
])
def test_validation_errors(tmp_path, row, fragment):
    with pytest.raises(ValidationError) as exc:
        load_catalog(write(tmp_path, row))
    assert exc.value.entry == "x"
    assert fragment in str(exc.value)


def test_sum_of_table_entries(tmp_path):
    rows = ("a,table,,-1;3;-1,1,,x", "b,sum,a:a*,1;-6;11;-6;1,2,,x")
    entries = load_catalog(write(tmp_path, *rows))
    assert entries[1].sigma is None
    assert entries[1].alexander.evaluate(1) == 1
