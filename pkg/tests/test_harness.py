import json

import pytest
from hypothesis import given, strategies as st

from polaract.harness import cli, fixtures, tables
from polaract.harness.formula import FormulaError, evaluate, holds
from polaract.harness.report import FAIL, INCONCLUSIVE, PASS, SKIPPED, Record, VerificationReport, round_sig


def test_formula_evaluate():
    assert evaluate("n - 1", n=4) == 3
    assert evaluate("floor(k / 2)", k=5) == 2
    assert evaluate("min(j - 1, 1)", j=3) == 1
    assert evaluate("(2*n-1)*(2*n-2)", n=3) == 20
    assert evaluate(7) == 7
    assert holds("k <= n // 2 and not k == 0", k=2, n=5)
    assert not holds("2 * k < n", k=2, n=4)


@pytest.mark.parametrize("expr", ["__import__('os')", "n.real", "x ** 2", "[1][0]", "n"])
def test_formula_rejects(expr):
    with pytest.raises(FormulaError):
        evaluate(expr, x=1)


@given(st.integers(-50, 50), st.integers(1, 20))
def test_formula_matches_python(a, b):
    assert evaluate("a // b + a % b - 3 * a", a=a, b=b) == a // b + a % b - 3 * a


def test_round_sig():
    assert round_sig(1.23456e-9) == 1.23e-9
    assert round_sig(0.0) == 0.0


def test_report_summary_and_exit_code():
    rep = VerificationReport("r")
    for i, o in enumerate([PASS, PASS, SKIPPED]):
        rep.add(Record(f"x{i}", o))
    assert rep.summary() == {PASS: 2, FAIL: 0, INCONCLUSIVE: 0, SKIPPED: 1, "total": 3}
    assert rep.exit_code == 0
    rep.add(Record("y", INCONCLUSIVE))
    assert rep.exit_code == 2
    rep.add(Record("z", FAIL))
    assert rep.exit_code == 1
    d = json.loads(rep.to_json())
    assert [f["id"] for f in d["fixtures"]] == sorted(f["id"] for f in d["fixtures"])
    assert "elapsed" not in rep.to_json()


@pytest.mark.parametrize("tid", tables.TABLE_IDS)
def test_tables_load(tid):
    check, entries = tables.load_table(tid)
    assert check and entries
    assert all(e.table_id == tid for e in entries)


def test_table_instances_respect_constraints():
    _, entries = tables.load_table("T2")
    row = next(e for e in entries if e.row_key == "BD I-I")
    envs = list(row.instances())
    assert envs and all(e["k"] <= e["l"] <= e["n"] // 2 for e in envs)
    assert row.fill("BDI:{l},{n-l}", {"n": 8, "l": 3, "k": 2}) == "BDI:3,5"


def test_verify_symbolic_tables():
    t3 = tables.verify_table("T3").summary()
    assert t3[FAIL] == t3[SKIPPED] == 0 and t3[PASS] > 100
    assert tables.verify_table("T6").summary()[PASS] == 6


def test_verify_small_ambient():
    rep = tables.verify_table("T4", max_ambient=8)
    s = rep.summary()
    assert s[FAIL] == 0 and s[PASS] >= 4


def test_fixture_registry():
    assert len(fixtures.fixture_ids()) == 22
    with pytest.raises(KeyError):
        fixtures.run_fixture("nope")
    assert fixtures.run_fixture("bds-f4").exit_code == 0


@pytest.mark.parametrize("argv,code", [
    (["cohom", "--space", "BDI:2,5", "--subgroup", "g2", "--expect", "0"], 0),
    (["cohom", "--space", "BDI:2,5", "--subgroup", "g2", "--expect", "1"], 1),
    (["check-polar", "--space", "AII:3", "--subgroup", "tensor:su3*su2"], 1),
    (["check-polar", "--space", "BDI:3,4", "--subgroup", "block:so5+so2", "--seed", "3"], 0),
    (["--seed", "2", "bds", "--type", "F4"], 0),
    (["weyl-dim", "--type", "F4", "--weight", "1,0,0,0"], 0),
    (["mrk-slice", "--type", "E6", "--s", "A5+A1", "--s2", "D5+T1"], 0),
    (["fixture", "run", "weyl-table6"], 0),
    (["fixture", "run", "missing"], 1),
    (["bds", "--type", "E5"], 1),
])
def test_cli_exit_codes(argv, code, capsys):
    assert cli.main(argv) == code


def test_cli_json(capsys):
    cli.main(["--json", "weyl-dim", "--type", "G2", "--weight", "1,0"])
    d = json.loads(capsys.readouterr().out)
    assert d["fixtures"][0]["measured"] == {"dimension": 7}
    cli.main(["mrk-slice", "--type", "F4", "--s", "B4", "--s2", "B4", "--json"])
    d = json.loads(capsys.readouterr().out)
    assert d["fixtures"][0]["measured"]["slice_roots"] == 16


def test_cli_json_deterministic(capsys):
    argv = ["--json", "check-polar", "--space", "AI:4", "--subgroup", "block:su3+z2", "--seed", "5"]
    outs = []
    for _ in range(2):
        cli.main(argv)
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["fixtures"][0]["measured"]["verdict"] == "non_polar"
