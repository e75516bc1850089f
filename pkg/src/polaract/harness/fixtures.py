"""Registered fixtures: individual claims checked with stored thresholds."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import action as act
from .. import liealg, rootsys, slicerep
from ..liealg import InconclusiveError
from .report import FAIL, INCONCLUSIVE, PASS, Record, VerificationReport
from .tables import make_action


@dataclass(frozen=True)
class Fixture:
    id: str
    description: str
    anchor: str
    run: Callable[[int, int, float, float], tuple]


def _non_polar(space, subgroup):
    def run(seed, samples, accept, reject):
        rep = act.check_polar(make_action(space, subgroup, seed, samples), accept, reject)
        ok = (rep.verdict == act.NON_POLAR and rep.min_violation > reject
              and rep.regular_samples >= 8)
        res = {"lie_triple": rep.lie_triple_residual, "orthogonality": rep.orthogonality_residual,
               "min_violation": rep.min_violation}
        return ok, act.NON_POLAR, {"verdict": rep.verdict, "cohomogeneity": rep.cohomogeneity,
                                   "regular_samples": rep.regular_samples}, res
    return run


def _cohomogeneity(space, subgroup, expected, verdict=None):
    def run(seed, samples, accept, reject):
        a = make_action(space, subgroup, seed, samples)
        coh = act.cohomogeneity(a)
        measured, res = {"cohomogeneity": coh}, {}
        ok = coh == expected
        if verdict:
            rep = act.check_polar(a, accept, reject)
            measured["verdict"] = rep.verdict
            res = {"lie_triple": rep.lie_triple_residual, "orthogonality": rep.orthogonality_residual,
                   "flatness": rep.flatness_residual}
            ok = ok and rep.verdict == verdict
        return ok, {"cohomogeneity": expected, **({"verdict": verdict} if verdict else {})}, measured, res
    return run


def _orbit_match(space, sub_a, sub_b):
    def run(seed, samples, accept, reject):
        a = make_action(space, sub_a, seed, samples)
        b = make_action(space, sub_b, seed, samples)
        ok, ev = act.orbits_match(a, b, points=max(samples, 8), angle_tol=accept)
        return ok, True, {"orbits_match": ok, "cohomogeneity": [ev["cohomogeneity_a"], ev["cohomogeneity_b"]],
                          "agreeing_points": ev["agreeing_points"]}, {"max_principal_angle": max(ev["max_angles"])}
    return run


def spin8_tensor_rep() -> slicerep.LinearRep:
    """spin(8) on the tensor product of its two half-spin modules (dimension 64)."""
    spin8 = liealg.spin8_in_spin9()
    m = spin8.mats
    a, b = m[:, :8, :8], m[:, 8:, 8:]
    eye = np.eye(8)
    rho = np.einsum("kij,lm->kiljm", a, eye).reshape(len(m), 64, 64) \
        + np.einsum("ij,klm->kiljm", eye, b).reshape(len(m), 64, 64)
    return slicerep.rep_from_matrices(spin8, rho)


def _spin8_tensor(seed, samples, accept, reject):
    rep = spin8_tensor_rep()
    dims = [sorted(slicerep.decompose_modules(rep, seed=seed + s).dims) for s in range(3)]
    eq = slicerep.has_equivalent_pair(rep)
    ok = all(d == [8, 56] for d in dims) and not eq
    return ok, {"dims": [8, 56], "equivalent_pair": False}, {"dims": dims, "equivalent_pair": eq}, \
        {"homomorphism": rep.homomorphism_residual()}


def _spin9_slice(seed, samples, accept, reject):
    a = make_action("BDI:8,8", "spin9", seed, samples)
    rep = slicerep.slice_representation(a, np.eye(16))
    ok = rep.dim == 56 and rep.algebra.dim == 28
    return ok, {"isotropy_dim": 28, "carrier_dim": 56}, \
        {"isotropy_dim": rep.algebra.dim, "carrier_dim": rep.dim}, {"homomorphism": rep.homomorphism_residual()}


def _slice_at_origin(space, subgroup, iso_dim, carrier_dim, cohom):
    def run(seed, samples, accept, reject):
        a = make_action(space, subgroup, seed, samples)
        rep = slicerep.slice_representation(a, np.eye(a.pair.n))
        lc = slicerep.linear_cohomogeneity(rep)
        coh = act.cohomogeneity(a)
        measured = {"isotropy_dim": rep.algebra.dim, "carrier_dim": rep.dim, "slice_cohomogeneity": lc,
                    "action_cohomogeneity": coh}
        expected = {"isotropy_dim": iso_dim, "carrier_dim": carrier_dim, "slice_cohomogeneity": cohom,
                    "action_cohomogeneity": cohom}
        return measured == expected, expected, measured, {}
    return run


def _equivalent_pair(seed, samples, accept, reject):
    a = make_action("AII:4", "block:ouz6+u1+z2", seed, samples)
    rep = slicerep.slice_representation(a, np.eye(16))
    dec = slicerep.decompose_modules(rep, seed=seed)
    eq = slicerep.has_equivalent_pair(rep, dec, seed=seed)
    return eq, {"equivalent_pair": True}, {"equivalent_pair": eq, "dims": sorted(dec.dims)}, {}


def _su2_doubled(seed, samples, accept, reject):
    so3 = liealg.build_classical("so", 3)
    rho = np.array([np.kron(np.eye(2), x) for x in so3.mats])
    rep = slicerep.rep_from_matrices(so3, rho)
    dec = slicerep.decompose_modules(rep, seed=seed)
    eq = slicerep.has_equivalent_pair(rep, dec, seed=seed)
    cd = slicerep.commutant_dimension(rep)
    ok = sorted(dec.dims) == [3, 3] and eq and cd >= 4
    return ok, {"dims": [3, 3], "equivalent_pair": True, "commutant_dim_at_least": 4}, \
        {"dims": sorted(dec.dims), "equivalent_pair": eq, "commutant_dim": cd}, {}


def _bds(typ, rank, expected, contains=False, vertex=None):
    def run(seed, samples, accept, reject):
        sys_ = rootsys.build_root_system(typ, rank)
        if vertex is not None:
            got = [rootsys.borel_de_siebenthal(sys_, vertex).label]
        else:
            got = sorted(rootsys.maximal_rank_subsystems(sys_))
        ok = set(expected) <= set(got) if contains else sorted(expected) == got
        return ok, sorted(expected), got, {}
    return run


def _mrk_slice(typ, rank, s, s2, expected):
    def run(seed, samples, accept, reject):
        sys_ = rootsys.build_root_system(typ, rank)
        a = rootsys.find_subsystem(sys_, s)
        b = rootsys.relative_position(sys_, a, rootsys.find_subsystem(sys_, s2))
        iso, sl = rootsys.maximal_rank_slice(sys_, a, b)
        return len(sl) == expected, {"slice_roots": expected}, \
            {"slice_roots": len(sl), "isotropy_roots": len(iso), "S": len(a), "S2": len(b)}, {}
    return run


def _weyl_table(seed, samples, accept, reject):
    rows = [("A", 2, (1, 1), 8), ("B", 3, (0, 0, 1), 8), ("B", 4, (0, 0, 0, 1), 16),
            ("C", 3, (0, 1, 0), 14), ("F", 4, (1, 0, 0, 0), 26), ("G", 2, (1, 0), 7)]
    got = [rootsys.weyl_dimension(t, r, w) for t, r, w, _ in rows]
    want = [d for *_, d in rows]
    return got == want, want, got, {}


_FIXTURES = [
    Fixture("tensstruct-su3xsu2-aii3", "SU(3)xSU(2) tensor subgroup on SU(6)/Sp(3) is not polar",
            "normal space not a Lie triple system", _non_polar("AII:3", "tensor:su3*su2")),
    Fixture("su3-ai4-nonpolar", "SU(3) in S(U(3)xU(1)) on SU(4)/SO(4) is not polar",
            "normal space not a Lie triple system", _non_polar("AI:4", "block:su3+z2")),
    Fixture("isotropy-rank-bdi25", "isotropy action of BDI(2,5) has cohomogeneity = rank",
            "sections are the flats", _cohomogeneity("BDI:2,5", "k", 2, act.POLAR_HYPERPOLAR)),
    Fixture("hermann-so2so5-bdi34", "SO(2)xSO(5) on BDI(3,4) is hyperpolar",
            "Hermann actions are hyperpolar", _cohomogeneity("BDI:3,4", "block:so5+so2", 2, act.POLAR_HYPERPOLAR)),
    Fixture("aii3-so6-coh2", "SO(6) on SU(6)/Sp(3)", "T2 A I-II",
            _cohomogeneity("AII:3", "block:ou6", 2, act.POLAR_HYPERPOLAR)),
    Fixture("g2-bdi25-transitive", "G2 on SO(7)/SO(5)xSO(2)", "T4", _cohomogeneity("BDI:2,5", "g2", 0)),
    Fixture("g2-bdi34-coh1", "G2 on SO(7)/SO(4)xSO(3)", "T4", _cohomogeneity("BDI:3,4", "g2", 1)),
    Fixture("so5-diii3-transitive", "SO(5) on SO(6)/U(3)", "T5 D I-III",
            _cohomogeneity("DIII:3", "block:so5+z1", 0)),
    Fixture("su3u1-aii2-transitive", "S(U(3)xU(1)) on SU(4)/Sp(2)", "T5 A III-II",
            _cohomogeneity("AII:2", "block:u3+u1", 0)),
    Fixture("orbiteq-su1su3-aiii22", "SU(1)xSU(3) vs S(U(1)xU(3)) on AIII(2,2)", "T1 A III-III",
            _orbit_match("AIII:2,2", "block:su1+su3", "block:u1+u3")),
    Fixture("orbiteq-g2so2-bdi27", "G2xSO(2) vs SO(7)xSO(2) on BDI(2,7)", "T1 BD I-I",
            _orbit_match("BDI:2,7", "block:g2+so2", "block:so7+so2")),
    Fixture("spin8-tensor-56", "spin(8) on the half-spin tensor splits as 8 + 56", "56-dimensional summand",
            _spin8_tensor),
    Fixture("spin9-slice-g8r16", "Spin(9) slice at the Spin(8)-stable 8-plane in G8(R^16)",
            "56-dimensional normal space", _spin9_slice),
    Fixture("slice-so2so5-bdi34", "slice of SO(2)xSO(5) on BDI(3,4) at the origin", "same cohomogeneity",
            _slice_at_origin("BDI:3,4", "block:so5+so2", 5, 6, 2)),
    Fixture("aiii-ii-equivalent-pair", "slice at origin of S((SO(6)U(1))xU(1)) on SU(8)/Sp(4)",
            "two equivalent modules", _equivalent_pair),
    Fixture("su2-adjoint-doubled", "su(2) on R^3 + R^3", "equivalent copies", _su2_doubled),
    Fixture("bds-f4", "maximal-rank subsystems of F4", "F4 maximal subgroups",
            _bds("F", 4, ["B4", "A2+A2", "C3+A1"])),
    Fixture("bds-g2", "maximal-rank subsystems of G2", "G2 maximal subgroups", _bds("G", 2, ["A1+A1", "A2"])),
    Fixture("bds-e6-vertex3", "E6 with the central vertex deleted", "A2+A2+A2",
            _bds("E", 6, ["A2+A2+A2"], vertex=3)),
    Fixture("mrk-slice-e6", "E6 slice roots for A5+A1 against D5+T1", "roots in R minus S and S'",
            _mrk_slice("E", 6, "A5+A1", "D5+T1", 16)),
    Fixture("mrk-slice-f4", "F4 slice roots for B4 against itself", "F II dimension 16",
            _mrk_slice("F", 4, "B4", "B4", 16)),
    Fixture("weyl-table6", "degrees of the low-degree representations", "T6", _weyl_table),
]
FIXTURES = {f.id: f for f in _FIXTURES}


def fixture_ids() -> list[str]:
    return sorted(FIXTURES)


def run_fixture(fixture_id: str, seed: int = 1, samples: int = 8, accept: float = act.ACCEPT,
                reject: float = act.REJECT) -> VerificationReport:
    if fixture_id not in FIXTURES:
        raise KeyError(f"unknown fixture id {fixture_id!r}")
    fx = FIXTURES[fixture_id]
    report = VerificationReport(f"fixture {fixture_id} seed={seed}")
    t0 = time.perf_counter()
    try:
        ok, expected, measured, res = fx.run(seed, samples, accept, reject)
        outcome, note = (PASS if ok else FAIL), ""
    except InconclusiveError as exc:
        outcome, expected, measured, res, note = INCONCLUSIVE, None, None, {}, str(exc)
    report.add(Record(fixture_id, outcome, expected, measured, res, seed, note, time.perf_counter() - t0))
    return report


def run_all(seed: int = 1, samples: int = 8, accept: float = act.ACCEPT,
            reject: float = act.REJECT) -> VerificationReport:
    report = VerificationReport(f"fixtures seed={seed}")
    for fid in fixture_ids():
        report.extend(run_fixture(fid, seed, samples, accept, reject))
    return report
