import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grs import cli, suites
from grs.algebra import Bound
from grs.cli import (
    EXIT_DISCREPANCY,
    EXIT_FAIL,
    EXIT_OK,
    EXIT_USAGE,
    UsageError,
    parse_spot,
    run_command,
)
from grs.report import Report

SMALL = "k=1,l=1,m=1,n=1,t=1,j=0,wordlen=3"

SCHEMA = {
    "type": "object",
    "required": ["suite", "bound", "spot", "checks", "summary"],
    "properties": {
        "suite": {"type": "string"},
        "bound": {
            "type": "object",
            "required": ["k", "l", "m", "n", "t", "j", "wordlen"],
            "properties": {key: {"type": "integer"} for key in ("k", "l", "m", "n", "t", "j", "wordlen")},
        },
        "spot": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["r", "s"],
                 "properties": {"r": {"type": "string"}, "s": {"type": "string"}}},
            ]
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "locus", "status", "counterexample"],
                "properties": {
                    "id": {"type": "string"},
                    "locus": {"type": "string", "minLength": 1},
                    "status": {"enum": ["pass", "fail", "paper-discrepancy"]},
                    "counterexample": {
                        "oneOf": [
                            {"type": "null"},
                            {"type": "object", "required": ["monomial", "lhs", "rhs"]},
                        ]
                    },
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "discrepancy"],
            "properties": {key: {"type": "integer", "minimum": 0} for key in ("pass", "fail", "discrepancy")},
        },
    },
}


def run(capsys, *argv):
    code = run_command(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- one-shot commands --------------------------------------------------------------

def test_normalize(capsys):
    assert run(capsys, "normalize", "d*a") == (EXIT_OK, "Det + r * b*c\n", "")


def test_normalize_strategies_agree(capsys):
    left = run(capsys, "normalize", "d*b*a*c*f", "--strategy", "leftmost")
    right = run(capsys, "normalize", "d*b*a*c*f", "--strategy", "rightmost")
    assert left == right


def test_pair_bc(capsys):
    code, out, _ = run(capsys, "pair", "B*C", "a^2*d")
    assert code == EXIT_OK
    assert out == "1 + r^-2\n"


def test_coproduct_counit_antipode(capsys):
    assert run(capsys, "coproduct", "b")[1] == "b ⊗ d + a ⊗ b\n"
    assert run(capsys, "counit", "a^2*f^-1")[1] == "1\n"
    assert run(capsys, "antipode", "f")[1] == "f^-1\n"
    assert run(capsys, "antipode", "b")[1] == "-r * b*Det^-1\n"


def test_convolve_and_calculus(capsys):
    assert run(capsys, "convolve", "B", "b")[1] == "a\n"
    assert run(capsys, "d", "f")[1] == "((-1 + r^-2) * f) w0\n"
    assert run(capsys, "calc", "d", "f")[1] == "((-1 + r^-2) * f) w0\n"
    assert run(capsys, "calc", "omega", "w+", "a")[1] == "(r^-1 * a) w+\n"
    assert run(capsys, "omega", "2", "f")[1] == "(f) w2\n"


def test_json_value_output(capsys):
    _code, out, _ = run(capsys, "normalize", "d*a", "--format", "json")
    assert json.loads(out) == {"command": "normalize", "inputs": ["d*a"], "result": "Det + r * b*c"}


# -- usage errors ---------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["normalize", "a**"],
    ["normalize", "B"],
    ["pair", "a", "b"],
    ["omega", "7", "a"],
    ["verify", "nonsense"],
    ["verify", "qybe", "--bound", "k=1,zz=3"],
    ["verify", "qybe", "--spot", "r=2,s=9"],
    ["verify", "qybe", "--spot", "r=4"],
    ["verify", "qybe", "--rvalue", "4"],
    ["normalize", "d*a", "--format", "yaml"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run_command(argv) == EXIT_USAGE
    assert capsys.readouterr().err


def test_parse_error_shows_position(capsys):
    code, _, err = run(capsys, "normalize", "a*x")
    assert code == EXIT_USAGE
    assert "^" in err.splitlines()[-1]


def test_parse_spot():
    assert parse_spot("r=4,s=9") == (4, 9)
    assert parse_spot("r=9/4,s=25/16") == (pytest.approx(2.25), pytest.approx(25 / 16))
    r0, s0 = parse_spot("random", seed=5)
    assert parse_spot(f"r={r0},s={s0}") == (r0, s0)
    with pytest.raises(UsageError):
        parse_spot("r=3,s=9")


# -- reports ----------------------------------------------------------------------------

def test_verify_qybe_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "qybe")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "summary: pass=3 fail=0 discrepancy=0"


def test_verify_suite_flag_matches_positional(capsys):
    assert run(capsys, "verify", "--suite", "qybe") == run(capsys, "verify", "qybe")


@pytest.mark.parametrize("suite", list(suites.SUITES))
def test_json_report_schema(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--bound", SMALL, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert data["suite"] == suite
    assert data["bound"] == Bound.parse(SMALL).as_dict()
    assert data["spot"] is None
    s = data["summary"]
    assert code == (EXIT_FAIL if s["fail"] else EXIT_DISCREPANCY if s["discrepancy"] else EXIT_OK)


def test_rtt_report_one_check_per_relation(capsys):
    from grs.rmatrix import rtt_extract
    relations, _ = rtt_extract()
    data = json.loads(run(capsys, "verify", "rtt", "--format", "json")[1])
    extracted = [c for c in data["checks"] if c["id"].startswith("rtt:extracted:")]
    assert len(extracted) == len(relations)
    assert all(c["status"] == "pass" for c in extracted)


def test_spot_flags(capsys):
    data = json.loads(run(capsys, "verify", "qybe", "--spot", "r=4,s=9", "--format", "json")[1])
    assert data["spot"] == {"r": "4", "s": "9"}
    same = json.loads(run(capsys, "verify", "qybe", "--rvalue", "4", "--svalue", "9", "--format", "json")[1])
    assert same == data
    code, out, _ = run(capsys, "verify", "glpq", "--spot", "random", "--seed", "2")
    assert code == EXIT_OK and "spot: r=" in out


def test_text_report_is_a_table(capsys):
    out = run(capsys, "verify", "qybe")[1].splitlines()
    assert out[0] == "suite: qybe"
    assert out[1].startswith("bound: k=")
    assert out[2].split() == ["status", "check", "locus"]
    assert all(line.startswith("pass") for line in out[3:-1])


def test_reports_are_byte_identical(capsys):
    for fmt in ("json", "text"):
        first = run(capsys, "verify", "pairing", "--bound", SMALL, "--format", fmt)[1]
        second = run(capsys, "verify", "pairing", "--bound", SMALL, "--format", fmt)[1]
        assert first == second


def test_ledger_lists_known_discrepancies(capsys):
    code, out, _ = run(capsys, "ledger", "--bound", SMALL, "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    ids = {c["id"] for c in data["checks"]}
    assert all(c["status"] == "paper-discrepancy" for c in data["checks"])
    for expected in ("hopf:printed-antipode-b", "r:relabel-transpose-equivalence", "pairing:CB-printed-upper-limit",
                     "dj:[X+,X-]=[H]", "block:MQ=rQM"):
        assert expected in ids
    assert any(i.startswith("l-display:") for i in ids)
    loci = {c["locus"] for c in data["checks"]}
    assert all(loci) and not any("§" in x for x in loci)


def test_tables_command(capsys):
    code, out, _ = run(capsys, "tables", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert {k: len(v) for k, v in data.items()} == {"omega": 25, "chi": 25, "conv": 25, "d": 5}
    text = run(capsys, "tables")[1]
    assert "# exterior derivatives" in text and "[printed:" in text


@settings(max_examples=30)
@given(st.lists(st.sampled_from(["pass", "fail", "paper-discrepancy"]), max_size=6))
def test_exit_code_contract_through_the_cli(statuses):
    def fake_suite(name, bound):
        rep = Report(name, bound)
        for i, s in enumerate(statuses):
            rep.add(f"c{i}", "plumbing", s == "pass", discrepancy=s == "paper-discrepancy")
        return rep

    original = cli.suites.run_suite
    cli.suites.run_suite = fake_suite
    try:
        code = run_command(["verify", "qybe", "--format", "json"])
    finally:
        cli.suites.run_suite = original
    want = EXIT_FAIL if "fail" in statuses else EXIT_DISCREPANCY if "paper-discrepancy" in statuses else EXIT_OK
    assert code == want


def test_console_script_subprocess():
    proc = subprocess.run([sys.executable, "-m", "grs.cli", "normalize", "d*a"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "Det + r * b*c\n"
    proc = subprocess.run([sys.executable, "-m", "grs.cli", "verify", "qybe", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    jsonschema.validate(json.loads(proc.stdout), SCHEMA)
    proc = subprocess.run([sys.executable, "-m", "grs.cli", "bogus"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
