"""Orbits of subgroups H of G on G/K: cohomogeneity and the polarity criterion.

At a point gK the normal space, pulled back to the origin, is
nu = p minus proj_p(Ad(g^-1) h). The action is polar iff nu is a Lie triple
system whose generated algebra nu + [nu, nu] is orthogonal to Ad(g^-1) h, and
hyperpolar iff in addition [nu, nu] = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field, asdict
from fractions import Fraction

import numpy as np

from . import liealg, symspace
from .liealg import InconclusiveError, MatrixLieAlgebra, adjoint_transport, algebra_rank, group_element
from .linalg import Subspace, intersect, orthonormalize, principal_angles
from .symspace import SymmetricPair, bracket_span, triple_residual

ACCEPT = 1e-6
REJECT = 1e-3
SAMPLE_STEPS = 10
RANK_TOL = 1e-9

POLAR_HYPERPOLAR = "polar_hyperpolar"
POLAR_NONFLAT = "polar_nonflat_candidate"
NON_POLAR = "non_polar"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, eq=False)
class GroupAction:
    pair: SymmetricPair
    h: MatrixLieAlgebra
    seed: int = 1
    samples: int = 8
    label: str = ""

    def __post_init__(self):
        if self.h.ambient_n != self.pair.n:
            raise ValueError("h and g live in different ambients")
        if self.h.dim and self.pair.g.membership_residual(self.h.mats) > 1e-8:
            raise ValueError(f"{self.h.label} is not contained in {self.pair.g.label}")

    def sample_point(self, i: int) -> np.ndarray:
        return group_element(self.pair.g, [self.seed, i], SAMPLE_STEPS)

    def with_h(self, h: MatrixLieAlgebra) -> "GroupAction":
        return GroupAction(self.pair, h, self.seed, self.samples, self.label)


@dataclass
class PolarityReport:
    cohomogeneity: int
    verdict: str
    lie_triple_residual: float
    orthogonality_residual: float
    flatness_residual: float
    samples_used: int
    seed: int
    regular_samples: int = 0
    nu_dims: list = field(default_factory=list)
    note: str = ""
    min_violation: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def _tangent_from_coords(coords: np.ndarray, p: Subspace, tol: float = RANK_TOL):
    if coords.size == 0:
        return Subspace.zero(p.ambient_dim), np.zeros(0)
    _, s, vt = np.linalg.svd(coords, full_matrices=False)
    if s[0] == 0:
        return Subspace.zero(p.ambient_dim), s
    # Coordinates come from orthonormal bases, so noise below tol is absolute.
    r = int(np.sum(s > tol * max(s[0], 1.0)))
    return Subspace(p.ambient_dim, vt[:r] @ p.basis), s


def orbit_tangent(action: GroupAction, g_elt: np.ndarray) -> Subspace:
    """proj_p(Ad(g^-1) h), the orbit tangent at gK pulled back to the origin."""
    g_elt = np.asarray(g_elt, dtype=float)
    if np.abs(g_elt.T @ g_elt - np.eye(len(g_elt))).max() > 1e-8:
        raise ValueError("g_elt is not orthogonal")
    hg = adjoint_transport(g_elt, action.h.basis)
    return _tangent_from_coords(hg.basis @ action.pair.p.basis.T, action.pair.p)[0]


def normal_space(action: GroupAction, g_elt: np.ndarray) -> Subspace:
    return orbit_tangent(action, g_elt).complement_in(action.pair.p)


def orbit_dims(action: GroupAction, count: int | None = None, start: int = 0) -> list[int]:
    count = action.samples if count is None else count
    return [orbit_tangent(action, action.sample_point(i)).dim for i in range(start, start + count)]


def _sampled_dims(action: GroupAction, rounds: int = 4):
    """Orbit dimensions over batches of samples until the max is hit twice."""
    dims: list[int] = []
    for r in range(rounds + 1):
        dims += orbit_dims(action, action.samples, start=r * action.samples)
        if dims.count(max(dims)) >= 2:
            return dims, True
    return dims, False


def cohomogeneity(action: GroupAction) -> int:
    """dim p minus the maximal orbit dimension over the sampled points."""
    dims, ok = _sampled_dims(action)
    if not ok:
        raise InconclusiveError(f"maximal orbit dimension attained only once: {dims}")
    return action.pair.p.dim - max(dims)


def _point_residuals(action: GroupAction, g_elt: np.ndarray, nu: Subspace):
    n = action.pair.n
    lts = triple_residual(nu, n)
    br = bracket_span(nu, n)
    s_alg = nu + br if br.dim else nu
    hg = adjoint_transport(g_elt, action.h.basis)
    if s_alg.dim and hg.dim:
        orth = float(np.linalg.norm(s_alg.basis @ hg.basis.T, 2))
    else:
        orth = 0.0
    x = nu.basis.reshape(-1, n, n)
    flat = 0.0
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            flat = max(flat, float(np.linalg.norm(x[i] @ x[j] - x[j] @ x[i])))
    return lts, orth, flat


def _verdict(per_sample, accept, reject) -> str:
    if all(l < accept and o < accept for l, o, _ in per_sample):
        if all(f < accept for _, _, f in per_sample):
            return POLAR_HYPERPOLAR
        return POLAR_NONFLAT
    if all(l > reject or o > reject for l, o, _ in per_sample):
        return NON_POLAR
    return INCONCLUSIVE


def check_polar(action: GroupAction, accept: float = ACCEPT, reject: float = REJECT) -> PolarityReport:
    """Apply the criterion at every regular sampled point."""
    p_dim = action.pair.p.dim
    pts, tangents = [], []
    note = ""
    for r in range(5):
        for i in range(r * action.samples, (r + 1) * action.samples):
            g = action.sample_point(i)
            pts.append(g)
            tangents.append(orbit_tangent(action, g))
        dims = [t.dim for t in tangents]
        if dims.count(max(dims)) >= 2:
            break
    else:
        note = "maximal orbit dimension attained only once"
    top = max(t.dim for t in tangents)
    per_sample, nu_dims = [], []
    for g, t in zip(pts, tangents):
        if t.dim != top:
            continue
        nu = t.complement_in(action.pair.p)
        nu_dims.append(nu.dim)
        per_sample.append(_point_residuals(action, g, nu))
    verdict = _verdict(per_sample, accept, reject) if not note else INCONCLUSIVE
    lts, orth, flat = (max(v[i] for v in per_sample) for i in range(3))
    worst = min(max(v[0], v[1]) for v in per_sample)
    return PolarityReport(p_dim - top, verdict, lts, orth, flat, len(pts), action.seed,
                          len(per_sample), nu_dims, note, worst)


def _slice_orbit_candidate(action: GroupAction, nu0: Subspace) -> Subspace:
    """Normal space, inside nu0, of the slice-representation orbit through a generic vector."""
    n = action.pair.n
    iso = intersect(action.h.basis, action.pair.k.basis)
    rng = np.random.default_rng([action.seed, 31337])
    v = rng.standard_normal(nu0.dim) @ nu0.basis
    vm = v.reshape(n, n)
    if iso.dim == 0:
        return nu0
    a = iso.basis.reshape(-1, n, n)
    tang = (a @ vm - vm @ a).reshape(iso.dim, -1)
    t, _ = _tangent_from_coords(tang @ nu0.basis.T, nu0)
    return t.complement_in(nu0)


def check_polar_at_origin(action: GroupAction, accept: float = ACCEPT, reject: float = REJECT) -> PolarityReport:
    """Criterion at g = identity.

    If eK lies on an orbit of principal dimension the full normal space is
    tested. Otherwise the only candidate tried is the normal space of a generic
    slice-representation orbit inside the normal space at eK; a failing
    candidate yields ``inconclusive`` since other candidates are not searched.
    """
    eye = np.eye(action.pair.n)
    dims, _ = _sampled_dims(action)
    top = max(dims)
    cohom = action.pair.p.dim - top
    t0 = orbit_tangent(action, eye)
    nu0 = t0.complement_in(action.pair.p)
    if t0.dim == top:
        nu, note = nu0, "origin is principal"
    else:
        nu, note = _slice_orbit_candidate(action, nu0), "origin singular; slice-orbit candidate"
    res = _point_residuals(action, eye, nu)
    if nu.dim != cohom:
        return PolarityReport(cohom, INCONCLUSIVE, *res, len(dims), action.seed, 0, [nu.dim],
                              note + "; candidate has wrong dimension")
    verdict = _verdict([res], accept, reject)
    if t0.dim != top and verdict == NON_POLAR:
        verdict = INCONCLUSIVE
    return PolarityReport(cohom, verdict, *res, len(dims), action.seed, 1, [nu.dim], note,
                          max(res[0], res[1]))


# ---------------------------------------------------------------- bounds

def _grassmann_bounds(pair: SymmetricPair) -> list[tuple[str, Fraction]]:
    t, prm = pair.space_type, pair.params
    out = []
    if t == "BDI":
        k, n = min(prm), sum(prm)
        if 3 <= k <= n - 3:
            out.append(("real Grassmannian: d >= 2n - 9", Fraction(2 * n - 9)))
    elif t == "AIII":
        l, n = min(prm), sum(prm)
        if 2 <= l <= n - 2:
            out.append(("complex Grassmannian: d >= 3n - 7", Fraction(3 * n - 7)))
    elif t == "CII":
        l, n = min(prm), sum(prm)
        if 2 <= l <= n - 2:
            out.append(("quaternionic Grassmannian: d >= 6n - 16", Fraction(6 * n - 16)))
    elif t == "DIII":
        n = 2 * prm[0]
        out.append(("SO(n)/U(n/2): d >= n^2/4 - n", Fraction(n * n, 4) - n))
    elif t == "AI":
        n = prm[0]
        out.append(("SU(n)/SO(n): d >= n^2/2 - n", Fraction(n * n, 2) - n))
    elif t == "AII":
        n = 2 * prm[0]
        out.append(("SU(n)/Sp(n/2): d >= n^2/2 - 2n", Fraction(n * n, 2) - 2 * n))
    elif t == "CI":
        n = prm[0]
        out.append(("Sp(n)/U(n): d >= n^2", Fraction(n * n)))
    return out


def is_hermitian(pair: SymmetricPair) -> bool:
    t, prm = pair.space_type, pair.params
    return t in ("AIII", "DIII", "CI") or (t == "BDI" and 2 in prm)


def dimension_audit(action: GroupAction, cohom: int | None = None) -> dict:
    """Applicable necessary conditions for polarity and whether the action violates them."""
    pair = action.pair
    d = action.h.dim
    cohom = cohomogeneity(action) if cohom is None else cohom
    lower = [{"bound": name, "required_dim": str(req), "dim_h": d, "violated": bool(d < req)}
             for name, req in _grassmann_bounds(pair)]
    upper = [{"bound": "cohomogeneity <= rk(G) + rk(K)",
              "value": symspace.section_dim_bound(pair), "cohomogeneity": cohom}]
    if is_hermitian(pair):
        upper.append({"bound": "cohomogeneity <= rk(H)", "value": algebra_rank(action.h),
                      "cohomogeneity": cohom})
    for u in upper:
        u["violated"] = bool(cohom > u["value"])
    return {"space": pair.label, "dim_h": d, "cohomogeneity": cohom, "lower_bounds": lower,
            "upper_bounds": upper,
            "polar_excluded": any(x["violated"] for x in lower + upper)}


# ---------------------------------------------------------------- comparisons

def orbits_match(a: GroupAction, b: GroupAction, points: int = 8, angle_tol: float = ACCEPT):
    """Necessary-condition evidence that two actions have the same orbits."""
    if a.pair is not b.pair and a.pair.label != b.pair.label:
        raise ValueError("actions live on different spaces")
    ca, cb = cohomogeneity(a), cohomogeneity(b)
    angles = []
    for i in range(points):
        g = a.sample_point(i)
        ta, tb = orbit_tangent(a, g), orbit_tangent(b, g)
        if ta.dim != tb.dim:
            angles.append(float("inf"))
        else:
            ang = principal_angles(ta, tb)
            angles.append(float(ang.max()) if ang.size else 0.0)
    agree = sum(x < angle_tol for x in angles)
    ok = ca == cb and agree >= points
    return ok, {"cohomogeneity_a": ca, "cohomogeneity_b": cb, "max_angles": angles,
                "agreeing_points": agree}


def commuting_involution_orbit(pair: SymmetricPair, tau: np.ndarray, tol: float = 1e-8):
    """h1 ∩ p for h1 the fixed algebra of a second involution commuting with the first.

    Returns (is_lie_triple, h1 ∩ p, residual).
    """
    tau = np.asarray(tau, dtype=float)
    s = pair.theta_matrix
    m = pair.g.mats
    st = np.einsum("ij,kjl,ml->kim", s @ tau, m, s @ tau, optimize=True)
    ts = np.einsum("ij,kjl,ml->kim", tau @ s, m, tau @ s, optimize=True)
    if np.abs(st - ts).max() > 1e-10:
        raise ValueError("involutions do not commute")
    h1 = liealg.fixed_subalgebra(pair.g, tau, +1.0, "h1")
    nu = intersect(h1.basis, pair.p)
    res = triple_residual(nu, pair.n)
    return res < tol, nu, res
