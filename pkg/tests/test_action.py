import numpy as np
import pytest
from hypothesis import given, strategies as st

from polaract import action as act
from polaract.harness.subgroups import parse_subgroup
from polaract.harness.tables import make_action
from polaract.symspace import parse_space, space_rank

HERMANN = [("AII:3", "block:ou6", 2), ("AIII:2,3", "block:ou5", 2), ("AIII:2,4", "block:spu3", 1),
           ("AIII:2,3", "block:u1+u4", 1), ("BDI:3,5", "block:so2+so6", 2), ("CII:1,2", "block:uq3", 1),
           ("CII:2,2", "block:sp1+sp3", 1), ("DIII:4", "block:so2+so6", 1),
           ("DIII:4", "sym:DIII:4@alpha", 1)]


def test_orbit_tangent_trivial_cases():
    pair = parse_space("BDI:2,5")
    k_act = act.GroupAction(pair, parse_subgroup("k", pair))
    assert act.orbit_tangent(k_act, np.eye(7)).dim == 0
    g_act = act.GroupAction(pair, parse_subgroup("g", pair))
    assert act.orbit_tangent(g_act, g_act.sample_point(0)).dim == pair.p.dim


def test_orbit_tangent_rejects_non_orthogonal():
    a = make_action("BDI:2,5", "k")
    with pytest.raises(ValueError):
        act.orbit_tangent(a, 2 * np.eye(7))


@pytest.mark.parametrize("space,sub,coh", HERMANN)
def test_hermann_actions_hyperpolar(space, sub, coh):
    a = make_action(space, sub)
    rep = act.check_polar(a)
    assert rep.cohomogeneity == coh
    assert rep.verdict == act.POLAR_HYPERPOLAR
    assert max(rep.lie_triple_residual, rep.orthogonality_residual, rep.flatness_residual) < 1e-6
    assert all(d == coh for d in rep.nu_dims)


@pytest.mark.parametrize("space,sub,coh", [("AII:3", "tensor:su3*su2", 3), ("AI:4", "block:su3+z2", 2)])
def test_non_polar_examples(space, sub, coh):
    rep = act.check_polar(make_action(space, sub))
    assert rep.verdict == act.NON_POLAR
    assert rep.cohomogeneity == coh
    assert rep.min_violation > 1e-3 and rep.regular_samples >= 8


@pytest.mark.parametrize("space", ["BDI:2,5", "AIII:1,3", "CI:2", "DIII:4", "G"])
def test_isotropy_cohomogeneity_is_rank(space):
    a = make_action(space, "k")
    assert act.cohomogeneity(a) == space_rank(a.pair)


def test_check_at_origin():
    assert act.check_polar_at_origin(make_action("CII:1,2", "block:uq3")).verdict != act.NON_POLAR
    rep = act.check_polar_at_origin(make_action("BDI:3,4", "k"))
    assert rep.verdict == act.POLAR_HYPERPOLAR and rep.cohomogeneity == 3


@given(st.integers(1, 50))
def test_verdict_invariant_under_conjugation(seed):
    base = act.check_polar(make_action("BDI:3,4", "block:so2+so5"))
    conj = act.check_polar(make_action("BDI:3,4", f"conj:{seed}:block:so2+so5"))
    assert (conj.verdict, conj.cohomogeneity) == (base.verdict, base.cohomogeneity)


def test_dimension_audit_bounds():
    au = act.dimension_audit(make_action("BDI:3,9", "block:so3+so9"))
    assert au["lower_bounds"][0]["required_dim"] == "15"
    au = act.dimension_audit(make_action("AIII:2,3", "block:ou5"))
    assert au["lower_bounds"][0]["required_dim"] == "8"
    au = act.dimension_audit(make_action("CI:3", "k"))
    assert any("rk(H)" in u["bound"] and u["value"] == 3 for u in au["upper_bounds"])
    assert not au["polar_excluded"]


def test_orbits_match_examples():
    ok, ev = act.orbits_match(make_action("AIII:2,2", "block:su1+su3"), make_action("AIII:2,2", "block:u1+u3"))
    assert ok and ev["agreeing_points"] == 8
    ok, ev = act.orbits_match(make_action("BDI:2,5", "block:so3+z4"), make_action("BDI:2,5", "block:so4+z3"))
    assert not ok and ev["cohomogeneity_a"] != ev["cohomogeneity_b"]


def test_commuting_involutions():
    pair = parse_space("BDI:3,3")
    tau = np.diag([1.0] * 5 + [-1.0])
    ok, nu, res = act.commuting_involution_orbit(pair, tau)
    assert ok and res < 1e-8
    ok, nu, _ = act.commuting_involution_orbit(pair, pair.theta_matrix)
    assert ok and nu.dim == 0
    with pytest.raises(ValueError):
        rot = np.eye(6)
        rot[[0, 3]] = rot[[3, 0]]
        act.commuting_involution_orbit(pair, np.eye(6) - 2 * np.outer(rot[0] + rot[1], rot[0] + rot[1]) / 2)


def test_commuting_involutions_quaternionic():
    pair = parse_space("CII:2,2")
    tau = np.kron(np.diag([1.0, 1.0, 1.0, -1.0]), np.eye(4))
    ok, nu, res = act.commuting_involution_orbit(pair, tau)
    assert ok and res < 1e-8 and nu.dim > 0
