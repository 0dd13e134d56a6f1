import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grs.algebra import Bound
from grs.report import DISCREPANCY, Check, Report, counterexample, merge, sample_pairs
from grs.scalars import LAMBDA, R, Scalar

BOUND = Bound(k=1, l=1, m=1, n=1, t=1, j=0, wordlen=3)


def test_empty_suite_has_zero_summary():
    rep = Report("empty", BOUND)
    assert rep.summary == {"pass": 0, "fail": 0, "discrepancy": 0}
    assert rep.exit_code() == 0
    assert rep.as_dict()["checks"] == []


def test_exit_code_rules():
    rep = Report("x", BOUND)
    rep.add("one", "plumbing", True)
    assert rep.exit_code() == 0
    rep.add("two", "plumbing", False, discrepancy=True)
    assert rep.exit_code() == 3
    rep.add("three", "plumbing", False)
    assert rep.exit_code() == 1


def test_check_requires_locus_and_known_status():
    with pytest.raises(ValueError):
        Check("x", "", "pass")
    with pytest.raises(ValueError):
        Check("x", "plumbing", "maybe")


def test_counterexample_only_on_non_passing():
    rep = Report("x", BOUND)
    cex = counterexample("a*b", R, 1)
    assert rep.add("ok", "plumbing", True, cex).counterexample is None
    bad = rep.add("bad", "plumbing", False, cex, discrepancy=True)
    assert bad.status == DISCREPANCY
    assert bad.counterexample == {"monomial": "a*b", "lhs": "r", "rhs": "1"}


def test_spot_check_catches_coincidental_symbolic_pass():
    rep = Report("x", BOUND)
    rep.add("lam", "plumbing", True, samples=[(LAMBDA * LAMBDA, R**2 - 2 + R**-2)])
    rep.add("bogus", "plumbing", True, samples=[(R, R.inverse())])
    spot = rep.spot_check(4, 9)
    status = {c.id: c.status for c in spot.checks}
    assert status == {"lam": "pass", "bogus": "fail"}
    assert spot.as_dict()["spot"] == {"r": "4", "s": "9"}


def test_sample_pairs_on_structures():
    assert sample_pairs(Scalar(), Scalar()) == [(Scalar(), Scalar())]
    pairs = sample_pairs({"x": R, "y": 1}, {"x": R, "y": 1})
    assert len(pairs) == 2


def test_merge_keeps_order():
    a, b = Report("a", BOUND), Report("b", BOUND)
    a.add("1", "plumbing", True)
    b.add("2", "plumbing", True)
    assert [c.id for c in merge("ab", [a, b], BOUND).checks] == ["1", "2"]


def test_text_form_is_a_table():
    rep = Report("demo", BOUND)
    rep.add("short", "plumbing", True)
    rep.add("a-longer-id", "somewhere", False, counterexample("b", 1, 2))
    lines = rep.to_text().splitlines()
    assert lines[0] == "suite: demo"
    assert lines[1] == "bound: k=1,l=1,m=1,n=1,t=1,j=0,wordlen=3"
    assert lines[2].split() == ["status", "check", "locus"]
    assert lines[3].index("short") == lines[4].index("a-longer-id")
    assert "at b: lhs = 1, rhs = 2" in lines[5]
    assert lines[-1] == "summary: pass=1 fail=1 discrepancy=0"


def test_json_round_trips():
    rep = Report("demo", BOUND)
    rep.add("x", "plumbing", False, counterexample("a", "r", "1"), discrepancy=True)
    data = json.loads(rep.to_json())
    assert data["summary"] == {"pass": 0, "fail": 0, "discrepancy": 1}
    assert data["checks"][0]["counterexample"]["lhs"] == "r"


@given(st.lists(st.sampled_from(["pass", "fail", "paper-discrepancy"]), max_size=12))
def test_exit_code_contract_with_injected_verdicts(statuses):
    rep = Report("inject", BOUND)
    for i, s in enumerate(statuses):
        rep.add(f"c{i}", "plumbing", s == "pass", discrepancy=s == "paper-discrepancy")
    want = 1 if "fail" in statuses else 3 if "paper-discrepancy" in statuses else 0
    assert rep.exit_code() == want
