import json
from fractions import Fraction

from hypothesis import given, strategies as st

from cusplab.lattice import GramLattice
from cusplab.linalg import Matrix
from cusplab.period import Component
from cusplab.report import Check, Report, jsonable


def test_jsonable_keeps_exact_values_exact():
    assert jsonable(Fraction(1, 3)) == "1/3"
    assert jsonable(Fraction(4, 2)) == 2
    assert jsonable(Matrix([[1, Fraction(1, 2)]])) == [[1, "1/2"]]
    assert jsonable(Component.UPPER) == "upper"
    assert jsonable({3, 1, 2}) == [1, 2, 3]
    assert jsonable(GramLattice([[2]])) == {"gram": [[2]], "labels": ["e1"]}
    assert jsonable(0.25) == 0.25


def _report():
    r = Report("demo", {"k": Fraction(2)})
    r.add("first", True, {"value": Fraction(-1, 3)})
    r.add("second", False, [1, 2])
    return r


def test_report_verdicts():
    r = _report()
    assert not r.passed
    assert r["first"].passed and not r["second"].passed
    assert Report("empty").passed


def test_json_round_trip():
    r = _report()
    again = Report.loads(r.dumps())
    assert again == r
    data = json.loads(r.dumps())
    assert data["checks"][0] == {"name": "first", "pass": True, "witness": {"value": "-1/3"}}
    assert data["pass"] is False and "wall_time_s" not in data


def test_text_form():
    text = _report().to_text().splitlines()
    assert text[0] == "demo"
    assert text[1].startswith("[PASS] first")
    assert text[2].startswith("[FAIL] second")
    assert text[-1] == "overall: FAIL"


def test_wall_time_appears_only_when_set():
    r = _report()
    r.wall_time = 0.5
    assert json.loads(r.dumps())["wall_time_s"] == 0.5
    assert r.to_text().splitlines()[-1] == "wall time: 0.500 s"


def test_extend_prefixes_names():
    r = Report("outer")
    r.extend(_report(), "inner: ")
    assert [c.name for c in r.checks] == ["inner: first", "inner: second"]


@given(st.lists(st.tuples(st.text(min_size=1, max_size=8), st.booleans(),
                          st.fractions(max_denominator=9)), max_size=6))
def test_round_trip_on_random_reports(items):
    r = Report("random")
    for name, ok, w in items:
        r.add(name, ok, w)
    assert Report.loads(r.dumps()) == r
    assert r.passed == all(ok for _, ok, _ in items)
    assert all(isinstance(c, Check) for c in r.checks)
