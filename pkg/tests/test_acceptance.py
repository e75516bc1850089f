"""Acceptance suite. Each test prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -s``."""
import time

import numpy as np
import pytest

from polaract import action as act
from polaract import liealg, rootsys, slicerep, symspace
from polaract.harness import fixtures, tables
from polaract.harness.fixtures import spin8_tensor_rep
from polaract.harness.tables import make_action

HERMANN_ROWS = [
    ("A I-II", {"n": 3}), ("A I-III", {"n": 5, "k": 2}), ("A II-III", {"n": 3, "k": 2}),
    ("A III-III", {"n": 5, "k": 1, "l": 2}), ("BD I-I", {"n": 8, "k": 2, "l": 3}), ("C I-II", {"n": 3, "k": 1}),
    ("C II-II", {"n": 4, "k": 1, "l": 2}), ("D I-III", {"n": 4, "k": 2}), ("D III-III'", {"n": 2}),
]
EXPECTED_COH = [2, 2, 1, 1, 2, 1, 1, 1, 1]


def _line(criterion: int, ok: bool, detail: str) -> None:
    print(f"\ncriterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")


def _row_action(key, env, seed=1):
    _, entries = tables.load_table("T2")
    entry = next(e for e in entries if e.row_key == key)
    assert env in list(entry.instances())
    a = make_action(entry.fill(entry.data["space"], env), entry.fill(entry.data["subgroup"], env), seed=seed)
    return a, entry.expect("cohomogeneity", env)


@pytest.fixture(scope="module")
def hermann_runs():
    runs = []
    for key, env in HERMANN_ROWS:
        t0 = time.perf_counter()
        a, want = _row_action(key, env)
        coh = act.cohomogeneity(a)
        t_coh = time.perf_counter() - t0
        again = act.cohomogeneity(_row_action(key, env)[0])
        runs.append({"key": key, "action": a, "table": want, "coh": coh, "repeat": again, "time": t_coh,
                     "report": act.check_polar(a)})
    return runs


def test_c1_table2_cohomogeneities(hermann_runs):
    bad = [r["key"] for r, e in zip(hermann_runs, EXPECTED_COH)
           if not (r["coh"] == r["table"] == e == r["repeat"] and r["time"] < 60)]
    slowest = max(r["time"] for r in hermann_runs)
    _line(1, not bad, f"{len(hermann_runs)} rows, slowest {slowest:.1f}s, mismatches {bad}")
    assert not bad


def test_c2_hermann_hyperpolar(hermann_runs):
    bad = []
    for r in hermann_runs:
        rep = r["report"]
        worst = max(rep.lie_triple_residual, rep.orthogonality_residual, rep.flatness_residual)
        if rep.verdict != act.POLAR_HYPERPOLAR or worst >= 1e-6:
            bad.append((r["key"], rep.verdict, worst))
    _line(2, not bad, f"{len(hermann_runs)} rows polar_hyperpolar, failures {bad}")
    assert not bad


def test_c3_non_polar():
    cases = [("AII:3", "tensor:su3*su2"), ("AI:4", "block:su3+z2")]
    reps = [act.check_polar(make_action(s, h)) for s, h in cases]
    ok = all(r.verdict == act.NON_POLAR and r.min_violation > 1e-3 and r.regular_samples >= 8 for r in reps)
    detail = ", ".join(f"{h}: {r.verdict} min violation {r.min_violation:.2e} over {r.regular_samples}"
                       for (_, h), r in zip(cases, reps))
    _line(3, ok, detail)
    assert ok


def test_c4_orbit_equivalence():
    cases = [("AIII:2,2", "block:su1+su3", "block:u1+u3"), ("BDI:2,7", "block:g2+so2", "block:so7+so2")]
    results = []
    for space, a, b in cases:
        ok, ev = act.orbits_match(make_action(space, a), make_action(space, b), points=8, angle_tol=1e-6)
        ok = ok and ev["cohomogeneity_a"] == ev["cohomogeneity_b"] and max(ev["max_angles"]) < 1e-6
        results.append((ok, ev["agreeing_points"], max(ev["max_angles"])))
    ok = all(r[0] for r in results)
    _line(4, ok, "; ".join(f"{c[1]} vs {c[2]}: {r[1]}/8 agree, max angle {r[2]:.1e}"
                           for c, r in zip(cases, results)))
    assert ok


def test_c5_transitivity():
    cases = [("BDI:2,5", "g2", 0), ("DIII:3", "block:so5+z1", 0), ("AII:2", "block:u3+u1", 0), ("BDI:3,4", "g2", 1)]
    got = [act.cohomogeneity(make_action(s, h)) for s, h, _ in cases]
    ok = got == [c for *_, c in cases]
    _line(5, ok, f"cohomogeneities {got}")
    assert ok


def test_c6_module_decomposition():
    rep = spin8_tensor_rep()
    dims = [sorted(slicerep.decompose_modules(rep, seed=s).dims) for s in range(3)]
    a = make_action("BDI:8,8", "spin9")
    carrier = slicerep.slice_representation(a, np.eye(16)).dim
    ok = all(d == [8, 56] for d in dims) and carrier == 56
    _line(6, ok, f"tensor summands {dims}, Spin(9) slice carrier {carrier}")
    assert ok


def test_c7_root_level():
    degrees = [rootsys.weyl_dimension(t, r, w) for t, r, w in [
        ("A", 2, (1, 1)), ("B", 3, (0, 0, 1)), ("B", 4, (0, 0, 0, 1)), ("C", 3, (0, 1, 0)),
        ("F", 4, (1, 0, 0, 0)), ("G", 2, (1, 0))]]
    f4 = rootsys.build_root_system("F", 4)
    e6 = rootsys.build_root_system("E", 6)
    f4_set = set(rootsys.maximal_rank_subsystems(f4))
    e6_v3 = rootsys.borel_de_siebenthal(e6, 3).label
    s = rootsys.find_subsystem(e6, "A5+A1")
    s2 = rootsys.relative_position(e6, s, rootsys.find_subsystem(e6, "D5+T1"))
    e6_slice = len(rootsys.maximal_rank_slice(e6, s, s2)[1])
    b4 = rootsys.find_subsystem(f4, "B4")
    f4_slice = len(rootsys.maximal_rank_slice(f4, b4, b4)[1])
    ok = (degrees == [8, 8, 16, 14, 26, 7] and f4_set == {"B4", "A2+A2", "C3+A1"}
          and "A2+A2+A2" in e6_v3 and e6_slice == 16 and f4_slice == 16)
    _line(7, ok, f"degrees {degrees}, F4 {sorted(f4_set)}, E6 v3 {e6_v3}, slices {e6_slice}/{f4_slice}")
    assert ok


def test_c8_property_suites(hermann_runs):
    failures = []
    spaces = symspace.catalog(32)
    for s in spaces:
        pair = symspace.parse_space(s)
        if liealg.ad_invariance_residual(pair.g) > 1e-9 or liealg.ad_invariance_residual(pair.k) > 1e-9:
            failures.append(("ad", s))
        if max(symspace.cartan_residuals(pair, max_pairs=4096).values()) > 1e-8:
            failures.append(("cartan", s))
        if act.cohomogeneity(make_action(s, "k")) != pair.expected_rank():
            failures.append(("rank", s))
    for r in hermann_runs:
        a = r["action"]
        if liealg.ad_invariance_residual(a.h) > 1e-9:
            failures.append(("ad", a.label))
        for i in range(5):
            rep = slicerep.slice_representation(a, a.sample_point(i))
            if slicerep.linear_cohomogeneity(rep) != r["coh"]:
                failures.append(("slice", a.label, i))
    for space, sub in [("AIII:2,3", "block:ou5"), ("AI:4", "block:su3+z2"), ("AII:3", "tensor:su3*su2")]:
        base = act.check_polar(make_action(space, sub)).verdict
        for seed in (11, 12, 13):
            if act.check_polar(make_action(space, f"conj:{seed}:{sub}")).verdict != base:
                failures.append(("conj", space, sub, seed))
    _line(8, not failures, f"{len(spaces)} pairs, {len(hermann_runs)} Hermann fixtures, failures {failures}")
    assert not failures


def test_c9_determinism():
    def run():
        rep = tables.verify_table("T4", seed=3)
        for fid in ("tensstruct-su3xsu2-aii3", "orbiteq-su1su3-aiii22", "aiii-ii-equivalent-pair", "weyl-table6"):
            rep.extend(fixtures.run_fixture(fid, seed=3))
        return rep.to_json()

    first, second = run(), run()
    ok = first == second
    _line(9, ok, f"two runs, {len(first)} bytes, identical={ok}")
    assert ok
