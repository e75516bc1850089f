"""Isotropy algebras, slice representations and their invariant decompositions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, cg

from . import liealg
from .action import GroupAction, _tangent_from_coords, orbit_tangent
from .liealg import InconclusiveError, MatrixLieAlgebra, adjoint_transport
from .linalg import Subspace, intersect, orthonormalize


@dataclass(frozen=True, eq=False)
class LinearRep:
    """Orthogonal representation: action_matrices[i] is rho(algebra basis i) on the carrier basis."""

    algebra: MatrixLieAlgebra
    carrier: Subspace
    action_matrices: np.ndarray

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def homomorphism_residual(self) -> float:
        m = self.algebra.mats
        rho = self.action_matrices
        worst = 0.0
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                c = self.algebra.coords(m[i] @ m[j] - m[j] @ m[i])
                lhs = np.tensordot(c, rho, axes=1)
                rhs = rho[i] @ rho[j] - rho[j] @ rho[i]
                worst = max(worst, float(np.abs(lhs - rhs).max()))
        return worst

    def restricted(self, sub: Subspace) -> np.ndarray:
        """Action matrices on an invariant subspace given in carrier coordinates."""
        b = sub.basis
        return np.einsum("ai,kij,bj->kab", b, self.action_matrices, b, optimize=True)


def isotropy_subalgebra(action: GroupAction, g_elt: np.ndarray) -> MatrixLieAlgebra:
    """Ad(g^-1) h ∩ k."""
    hg = adjoint_transport(np.asarray(g_elt, float), action.h.basis)
    sub = intersect(hg, action.pair.k.basis)
    return MatrixLieAlgebra(action.pair.n, sub, f"iso[{action.h.label}]")


def slice_representation(action: GroupAction, g_elt: np.ndarray) -> LinearRep:
    """Isotropy algebra acting on the normal space at g_elt K (pulled back to the origin)."""
    n = action.pair.n
    iso = isotropy_subalgebra(action, g_elt)
    nu = orbit_tangent(action, g_elt).complement_in(action.pair.p)
    if nu.dim == 0 or iso.dim == 0:
        return LinearRep(iso, nu, np.zeros((iso.dim, nu.dim, nu.dim)))
    x = nu.basis.reshape(-1, n, n)
    a = iso.mats
    br = np.einsum("kij,bjl->kbil", a, x) - np.einsum("bij,kjl->kbil", x, a)
    rho = np.einsum("ai,kbi->kab", nu.basis, br.reshape(iso.dim, nu.dim, -1))
    return LinearRep(iso, nu, rho)


def rep_from_matrices(algebra: MatrixLieAlgebra, mats) -> LinearRep:
    mats = np.asarray(mats, float)
    d = mats.shape[-1]
    return LinearRep(algebra, Subspace.full(d), mats)


def linear_cohomogeneity(rep: LinearRep, seeds=(0, 1, 2, 3, 4)) -> int:
    """Carrier dimension minus the maximal orbit dimension at random vectors."""
    if rep.dim == 0:
        return 0
    best = 0
    for s in seeds:
        v = np.random.default_rng([s, 2718]).standard_normal(rep.dim)
        tang = rep.action_matrices @ v
        if len(tang):
            best = max(best, _tangent_from_coords(tang, Subspace.full(rep.dim))[0].dim)
    return rep.dim - best


def _null_rows(a: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    return liealg._null_coeffs(a, tol)


def trivial_subspace(rep: LinearRep) -> Subspace:
    """Vectors fixed by every action matrix (carrier coordinates)."""
    d = rep.dim
    if len(rep.action_matrices) == 0:
        return Subspace.full(d)
    stacked = rep.action_matrices.reshape(-1, d)
    return Subspace(d, _null_rows(stacked)) if stacked.size else Subspace.full(d)


def _commutant_projection(rho: np.ndarray, start: np.ndarray, tol: float = 1e-13):
    """Project ``start`` onto {T : rho_i T = T rho_i} in the Frobenius metric.

    Uses conjugate gradients on L(T) = -sum_i [rho_i, [rho_i, T]], a positive
    semidefinite operator whose kernel is the commutant.
    """
    a, b = start.shape
    rl, rr = rho

    def lap(t):
        t = t.reshape(a, b)
        out = np.zeros_like(t)
        for x, y in zip(rl, rr):
            c = x @ t - t @ y
            out -= x @ c - c @ y
        return out.ravel()

    op = LinearOperator((a * b, a * b), matvec=lap, dtype=float)
    rhs = lap(start.ravel())
    scale = np.linalg.norm(rhs)
    if scale == 0:
        return start, 0.0
    y, info = cg(op, rhs, rtol=tol, atol=0.0, maxiter=20 * a * b)
    t = start - y.reshape(a, b)
    resid = np.linalg.norm(lap(t.ravel())) / max(np.linalg.norm(t), 1e-300)
    if info != 0 and resid > 1e-8:
        raise InconclusiveError(f"commutant solve did not converge (residual {resid:.1e})")
    return t, resid


def _eigenspaces(mat: np.ndarray, rel_gap: float = 1e-6) -> list[np.ndarray]:
    w, v = np.linalg.eigh(mat)
    scale = max(np.abs(w).max(), 1e-300)
    groups, cur = [], [0]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] > rel_gap * scale:
            groups.append(cur)
            cur = []
        cur.append(i)
    groups.append(cur)
    return [v[:, g].T for g in groups]


@dataclass
class Decomposition:
    trivial: Subspace
    summands: list
    condition: float = 0.0

    @property
    def dims(self) -> list[int]:
        return sorted(s.dim for s in self.summands)


def decompose_modules(rep: LinearRep, seed: int = 0) -> Decomposition:
    """Split the carrier into the fixed subspace and commutant-atomic invariant summands.

    The nontrivial part is split by Casimir eigenvalues first, then each block
    by the eigenspaces of a random symmetric commutant element.
    """
    d = rep.dim
    if d == 0:
        return Decomposition(Subspace.zero(0), [])
    triv = trivial_subspace(rep)
    rest = triv.orthogonal_complement()
    if rest.dim == 0:
        return Decomposition(triv, [])
    rho = rep.restricted(rest)
    cas = -np.einsum("kij,kjl->il", rho, rho)
    rng = np.random.default_rng([seed, 1618])
    summands, worst = [], 0.0
    for block in _eigenspaces(cas, 1e-8):
        r = np.einsum("ai,kij,bj->kab", block, rho, block, optimize=True)
        s0 = rng.standard_normal((len(block), len(block)))
        t, res = _commutant_projection((r, r), s0 + s0.T)
        worst = max(worst, res)
        for e in _eigenspaces(0.5 * (t + t.T)):
            summands.append(Subspace(d, orthonormalize(e @ block @ rest.basis).basis))
    for s in summands:
        inv = invariance_residual(rep, s)
        if inv > 1e-7:
            raise InconclusiveError(f"summand of dim {s.dim} not invariant (residual {inv:.1e})")
    summands.sort(key=lambda s: s.dim)
    return Decomposition(triv, summands, worst)


def invariance_residual(rep: LinearRep, sub: Subspace) -> float:
    if sub.dim == 0 or len(rep.action_matrices) == 0:
        return 0.0
    img = np.einsum("kij,aj->kai", rep.action_matrices, sub.basis)
    out = img - (img @ sub.basis.T) @ sub.basis
    return float(np.abs(out).max())


def commutant_dimension(rep: LinearRep, max_dim: int = 40) -> int:
    """Exact dimension of the full commutant via a null-space count (small carriers only)."""
    d = rep.dim
    if d > max_dim:
        raise ValueError(f"carrier of dimension {d} is too large for the dense count")
    eye = np.eye(d)
    rows = [np.kron(x, eye) - np.kron(eye, x.T) for x in rep.action_matrices]
    if not rows:
        return d * d
    return len(_null_rows(np.vstack(rows)))


def intertwiner_norm(rep: LinearRep, u: Subspace, w: Subspace, seed: int = 0) -> float:
    """Norm of the projection of a random matrix onto Hom_g(W, U), relative to its own norm."""
    ru, rw = rep.restricted(u), rep.restricted(w)
    rng = np.random.default_rng([seed, 577])
    m0 = rng.standard_normal((u.dim, w.dim))
    t, _ = _commutant_projection((ru, rw), m0)
    return float(np.linalg.norm(t) / np.linalg.norm(m0))


def has_equivalent_pair(rep: LinearRep, decomposition: Decomposition | None = None,
                        tol: float = 1e-6, seed: int = 0) -> bool:
    """True iff two distinct nontrivial summands admit a nonzero intertwiner."""
    dec = decomposition or decompose_modules(rep, seed)
    ss = dec.summands
    for i in range(len(ss)):
        for j in range(i + 1, len(ss)):
            if ss[i].dim == ss[j].dim and intertwiner_norm(rep, ss[i], ss[j], seed) > tol:
                return True
    return False


def verify_hermann_slice(action: GroupAction, expected_dim: int, expected_rank: int) -> dict:
    """Compare the slice at the origin with a symmetric space's dimension and rank."""
    rep = slice_representation(action, np.eye(action.pair.n))
    coh = linear_cohomogeneity(rep)
    return {"carrier_dim": rep.dim, "slice_cohomogeneity": coh, "expected_dim": expected_dim,
            "expected_rank": expected_rank, "ok": rep.dim == expected_dim and coh == expected_rank}
