"""Compact classical matrix Lie algebras realified into a common so(N).

Conventions: a complex entry x + iy becomes the 2x2 block [[x, -y], [y, x]]
(interleaved per coordinate) and a quaternion a + bi + cj + dk becomes its
4x4 left-multiplication block on the basis (1, i, j, k).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field, replace
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from . import octonions
from .linalg import DEFAULT_TOL, DimensionMismatch, Subspace, numeric_rank, orthonormalize


class InconclusiveError(RuntimeError):
    """Randomized estimates disagreed across seeds."""


class EmbeddingError(ValueError):
    pass


EPS2 = np.array([[0.0, -1.0], [1.0, 0.0]])

# Left multiplication by 1, i, j, k on H = R^4.
QUAT_UNITS = np.array([
    np.eye(4),
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
], dtype=float)


def realify_complex(z) -> np.ndarray:
    """Real (2n x 2n) image of complex matrices (works on stacks)."""
    z = np.asarray(z, dtype=complex)
    return np.kron(z.real, np.eye(2)) + np.kron(z.imag, EPS2)


def complexify(r) -> np.ndarray:
    """Inverse of realify_complex (assumes the input commutes with the complex structure)."""
    r = np.asarray(r, dtype=float)
    return r[..., 0::2, 0::2] + 1j * r[..., 1::2, 0::2]


def realify_quaternion(a, b, c, d) -> np.ndarray:
    """Real (4n x 4n) image of the quaternion matrix a + bi + cj + dk."""
    return sum(np.kron(np.asarray(m, dtype=float), u) for m, u in zip((a, b, c, d), QUAT_UNITS))


def quaternion_parts(r) -> tuple[np.ndarray, ...]:
    r = np.asarray(r, dtype=float)
    return tuple(r[..., k::4, 0::4] for k in range(4))


def quaternion_to_complex(r) -> np.ndarray:
    """Complex 2n x 2n image [[Z1, -Z2], [conj Z2, conj Z1]] of a realified quaternion matrix.

    With q = Z1 + Z2 j this is left multiplication on H^n viewed as a right
    complex vector space with basis (1, j).
    """
    a, b, c, d = quaternion_parts(r)
    z1, z2 = a + 1j * b, c + 1j * d
    top = np.concatenate([z1, -z2], axis=-1)
    bot = np.concatenate([z2.conj(), z1.conj()], axis=-1)
    return np.concatenate([top, bot], axis=-2)


def quaternionic_structure(n: int) -> np.ndarray:
    """J = [[0, -I], [I, 0]] on C^{2n}; X J = J conj(X) for quaternionic X."""
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = -np.eye(n)
    j[n:, :n] = np.eye(n)
    return j


@dataclass(frozen=True, eq=False)
class MatrixLieAlgebra:
    """Bracket-closed subspace of skew-symmetric real N x N matrices."""

    ambient_n: int
    basis: Subspace
    label: str = ""
    rank_cache: int | None = None
    field: str = "real"
    _mats: np.ndarray | None = dc_field(default=None, repr=False)

    @classmethod
    def from_matrices(cls, mats, label="", tol=DEFAULT_TOL, field="real", rank=None):
        mats = np.asarray(mats, dtype=float)
        if mats.ndim == 2:
            mats = mats[None]
        if mats.size == 0:
            n = mats.shape[-1]
            return cls(n, Subspace.zero(n * n, tol), label, rank, field)
        n = mats.shape[-1]
        if mats.shape[-2] != n:
            raise DimensionMismatch("matrices must be square")
        asym = np.abs(mats + np.swapaxes(mats, -1, -2)).max()
        if asym > 1e-12 * max(1.0, np.abs(mats).max()):
            raise ValueError(f"matrices are not skew-symmetric (defect {asym:.2e})")
        return cls(n, orthonormalize(mats.reshape(len(mats), -1), tol), label, rank, field)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def mats(self) -> np.ndarray:
        if self._mats is None:
            m = self.basis.basis.reshape(-1, self.ambient_n, self.ambient_n)
            object.__setattr__(self, "_mats", m)
        return self._mats

    def element(self, coeffs) -> np.ndarray:
        return np.tensordot(np.asarray(coeffs, dtype=float), self.mats, axes=1)

    def coords(self, mats) -> np.ndarray:
        m = np.asarray(mats, dtype=float)
        return m.reshape(*m.shape[:-2], -1) @ self.basis.basis.T

    def membership_residual(self, mats) -> float:
        """Largest relative distance of the given matrices from the algebra."""
        m = np.asarray(mats, dtype=float).reshape(-1, self.ambient_n ** 2)
        norms = np.linalg.norm(m, axis=1)
        # Rows at rounding-noise level carry no direction; dividing by them would inflate noise.
        ok = norms > 1e-10 * max(float(norms.max(initial=0.0)), 1.0)
        if not ok.any():
            return 0.0
        m = m[ok]
        res = m - (m @ self.basis.basis.T) @ self.basis.basis
        return float((np.linalg.norm(res, axis=1) / norms[ok]).max())

    def contains(self, other: "MatrixLieAlgebra", tol: float = 1e-8) -> bool:
        return other.ambient_n == self.ambient_n and self.membership_residual(other.mats) < tol

    def relabel(self, label: str) -> "MatrixLieAlgebra":
        return replace(self, label=label, _mats=None)

    def __repr__(self):
        return f"MatrixLieAlgebra({self.label!r}, dim={self.dim}, N={self.ambient_n})"


def bracket(x, y):
    return x @ y - y @ x


def closure_residual(alg: MatrixLieAlgebra, max_pairs: int | None = None, seed: int = 0) -> float:
    """Max relative distance of [X_i, X_j] from the algebra over basis pairs.

    With ``max_pairs`` set and more pairs available, a seeded random subset is used.
    """
    k = alg.dim
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    if not pairs:
        return 0.0
    if max_pairs is not None and len(pairs) > max_pairs:
        rng = np.random.default_rng(seed)
        idx = rng.choice(len(pairs), size=max_pairs, replace=False)
        pairs = [pairs[t] for t in sorted(idx)]
    m = alg.mats
    worst = 0.0
    chunk = 512
    for start in range(0, len(pairs), chunk):
        sel = np.array(pairs[start:start + chunk])
        a, b = m[sel[:, 0]], m[sel[:, 1]]
        worst = max(worst, alg.membership_residual(a @ b - b @ a))
    return worst


def ad_invariance_residual(alg: MatrixLieAlgebra, trials: int = 20, seed: int = 0) -> float:
    """max |<[X,Y],Z> + <Y,[X,Z]>| over random basis triples."""
    if alg.dim == 0:
        return 0.0
    rng = np.random.default_rng(seed)
    m = alg.mats
    worst = 0.0
    for _ in range(trials):
        x, y, z = m[rng.integers(alg.dim, size=3)]
        worst = max(worst, abs(np.sum(bracket(x, y) * z) + np.sum(y * bracket(x, z))))
    return worst


# ---------------------------------------------------------------- classical

def _so_mats(n: int) -> np.ndarray:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j], m[j, i] = -1.0, 1.0
            out.append(m)
    return np.array(out).reshape(-1, n, n)


def _u_complex(n: int, traceless: bool) -> list[np.ndarray]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), complex)
            m[i, j], m[j, i] = 1.0, -1.0
            out.append(m)
            m = np.zeros((n, n), complex)
            m[i, j] = m[j, i] = 1j
            out.append(m)
    if traceless:
        for i in range(n - 1):
            m = np.zeros((n, n), complex)
            m[i, i], m[i + 1, i + 1] = 1j, -1j
            out.append(m)
    else:
        for i in range(n):
            m = np.zeros((n, n), complex)
            m[i, i] = 1j
            out.append(m)
    return out


def _sp_mats(n: int) -> np.ndarray:
    z = np.zeros((n, n))
    out = []
    for i in range(n):
        for unit in (1, 2, 3):
            parts = [z.copy() for _ in range(4)]
            parts[unit][i, i] = 1.0
            out.append(realify_quaternion(*parts))
        for j in range(i + 1, n):
            for unit in range(4):
                parts = [z.copy() for _ in range(4)]
                # q E_ij - conj(q) E_ji
                parts[unit][i, j] = 1.0
                parts[unit][j, i] = -1.0 if unit == 0 else 1.0
                out.append(realify_quaternion(*parts))
    return np.array(out)


def build_classical(family: str, n: int, tol: float = DEFAULT_TOL) -> MatrixLieAlgebra:
    """so(n), u(n), su(n) or sp(n) realified into so(n), so(2n), so(2n), so(4n)."""
    if family == "so" and n >= 1:
        if n == 1:
            return MatrixLieAlgebra(1, Subspace.zero(1, tol), "so(1)", 0)
        return MatrixLieAlgebra.from_matrices(_so_mats(n), f"so({n})", tol)
    if family == "u" and n >= 1:
        return MatrixLieAlgebra.from_matrices(realify_complex(np.array(_u_complex(n, False))),
                                              f"u({n})", tol, "complex")
    if family == "su" and n >= 2:
        return MatrixLieAlgebra.from_matrices(realify_complex(np.array(_u_complex(n, True))),
                                              f"su({n})", tol, "complex")
    if family == "sp" and n >= 1:
        return MatrixLieAlgebra.from_matrices(_sp_mats(n), f"sp({n})", tol, "quaternion")
    raise ValueError(f"unsupported classical algebra {family}({n})")


def classical_dim(family: str, n: int) -> int:
    return {"so": n * (n - 1) // 2, "u": n * n, "su": n * n - 1, "sp": n * (2 * n + 1)}[family]


# ---------------------------------------------------------------- embeddings

class EmbeddingKind(enum.Enum):
    BlockDiagonal = "BlockDiagonal"
    TensorProduct = "TensorProduct"
    RealifyComplex = "RealifyComplex"
    RealifyQuaternion = "RealifyQuaternion"
    UnitaryInOrthogonal = "UnitaryInOrthogonal"
    SymplecticInUnitary = "SymplecticInUnitary"
    OrthogonalInUnitary = "OrthogonalInUnitary"
    Diagonal = "Diagonal"
    G2InSO7 = "G2InSO7"
    Spin7InSO8 = "Spin7InSO8"
    Spin9InSO16 = "Spin9InSO16"
    AdjointSU3InSO8 = "AdjointSU3InSO8"
    ConjugateBy = "ConjugateBy"


@dataclass(frozen=True)
class EmbeddingSpec:
    """How to place component algebras inside a larger so(N).

    params by kind:
      BlockDiagonal: real block sizes, one per component (None components are zero blocks).
      TensorProduct: empty; the component fields pick real, complex or quaternionic Kronecker products.
      Diagonal: (copies,).
      UnitaryInOrthogonal / SymplecticInUnitary / OrthogonalInUnitary: (n,).
      ConjugateBy: uses ``element``.
    """

    kind: EmbeddingKind
    params: tuple = ()
    element: np.ndarray | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", EmbeddingKind(self.kind))


def block_diagonal(components: Sequence[MatrixLieAlgebra | None], sizes: Sequence[int] | None = None,
                   label: str | None = None) -> MatrixLieAlgebra:
    if sizes is None:
        if any(c is None for c in components):
            raise EmbeddingError("zero blocks need explicit sizes")
        sizes = [c.ambient_n for c in components]
    if len(sizes) != len(components):
        raise EmbeddingError("one size per component required")
    for c, s in zip(components, sizes):
        if c is not None and c.ambient_n != s:
            raise EmbeddingError(f"component {c.label} has ambient {c.ambient_n}, block size {s}")
    n = int(sum(sizes))
    mats = []
    off = 0
    fields = set()
    for c, s in zip(components, sizes):
        if c is not None:
            fields.add(c.field)
            for m in c.mats:
                big = np.zeros((n, n))
                big[off:off + s, off:off + s] = m
                mats.append(big)
        off += s
    name = label or "+".join(c.label if c is not None else f"0({s})" for c, s in zip(components, sizes))
    fld = fields.pop() if len(fields) == 1 else "real"
    if not mats:
        return MatrixLieAlgebra(n, Subspace.zero(n * n), name, 0, fld)
    return MatrixLieAlgebra.from_matrices(np.array(mats), name, field=fld)


def _real_form_restriction(mats: np.ndarray, structure: np.ndarray) -> np.ndarray:
    """Restrict complex matrices commuting with v -> structure @ conj(v) to its real points.

    ``structure`` must satisfy structure @ conj(structure) = I. Returns real
    matrices in an orthonormal real basis of {v : structure conj(v) = v}.
    """
    n = structure.shape[0]
    cands = []
    for m in range(n):
        e = np.zeros(n, complex)
        e[m] = 1.0
        for v in (e, 1j * e):
            cands.append(v + structure @ v.conj())
    real_vecs = np.array([np.concatenate([c.real, c.imag]) for c in cands])
    basis = orthonormalize(real_vecs).basis
    if basis.shape[0] != n:
        raise EmbeddingError("real structure has wrong dimension")
    b = basis[:, :n] + 1j * basis[:, n:]
    return np.real(np.einsum("ai,kij,bj->kab", b.conj(), mats, b, optimize=True))


def tensor_product(a: MatrixLieAlgebra, b: MatrixLieAlgebra, label: str | None = None) -> MatrixLieAlgebra:
    """Image of a + b under X, Y -> X (x) 1 + 1 (x) Y in the appropriate realified ambient."""
    name = label or f"{a.label}*{b.label}"
    fa, fb = a.field, b.field
    if fa == "quaternion" and fb == "real":
        return tensor_product(b, a, label=name)
    if fa == "real" and fb == "real":
        ia, ib = np.eye(a.ambient_n), np.eye(b.ambient_n)
        mats = [np.kron(x, ib) for x in a.mats] + [np.kron(ia, y) for y in b.mats]
        fld = "real"
    elif fa == "real" and fb == "quaternion":
        ia, ib = np.eye(a.ambient_n), np.eye(b.ambient_n)
        mats = [np.kron(x, ib) for x in a.mats] + [np.kron(ia, y) for y in b.mats]
        fld = "quaternion"
    elif fa in ("complex", "real") and fb in ("complex", "real") and "complex" in (fa, fb):
        za = complexify(a.mats) if fa == "complex" else a.mats.astype(complex)
        zb = complexify(b.mats) if fb == "complex" else b.mats.astype(complex)
        ia, ib = np.eye(za.shape[-1]), np.eye(zb.shape[-1])
        z = [np.kron(x, ib) for x in za] + [np.kron(ia, y) for y in zb]
        mats = realify_complex(np.array(z))
        fld = "complex"
    elif fa == "quaternion" and fb == "quaternion":
        za, zb = quaternion_to_complex(a.mats), quaternion_to_complex(b.mats)
        ia, ib = np.eye(za.shape[-1]), np.eye(zb.shape[-1])
        z = np.array([np.kron(x, ib) for x in za] + [np.kron(ia, y) for y in zb])
        ja = quaternionic_structure(za.shape[-1] // 2)
        jb = quaternionic_structure(zb.shape[-1] // 2)
        mats = _real_form_restriction(z, np.kron(ja, jb))
        fld = "real"
    else:
        raise EmbeddingError(f"unsupported tensor product of {fa} and {fb} algebras")
    return MatrixLieAlgebra.from_matrices(np.array(mats), name, field=fld)


def adjoint_embedding(alg: MatrixLieAlgebra, label: str | None = None) -> MatrixLieAlgebra:
    """ad(alg) acting on alg in its orthonormal basis, as a subalgebra of so(dim alg)."""
    m = alg.mats
    ads = np.array([alg.coords(x @ m - m @ x).T for x in m])
    return MatrixLieAlgebra.from_matrices(ads, label or f"ad {alg.label}")


def conjugate(alg: MatrixLieAlgebra, g: np.ndarray, label: str | None = None) -> MatrixLieAlgebra:
    """Ad(g) alg = g alg g^T for orthogonal g."""
    g = np.asarray(g, dtype=float)
    if g.shape != (alg.ambient_n, alg.ambient_n):
        raise DimensionMismatch("conjugating element has the wrong size")
    mats = np.einsum("ij,kjl,ml->kim", g, alg.mats, g, optimize=True)
    return MatrixLieAlgebra.from_matrices(mats, label or alg.label, field=alg.field)


def g2_in_so7() -> MatrixLieAlgebra:
    return MatrixLieAlgebra.from_matrices(octonions.g2_derivations(), "g2", rank=2)


def spin7_in_so8() -> MatrixLieAlgebra:
    gam = octonions.spin7_generators()
    mats = [gam[i] @ gam[j] for i in range(7) for j in range(i + 1, 7)]
    return MatrixLieAlgebra.from_matrices(np.array(mats), "spin(7)", rank=3)


def spin9_in_so16() -> MatrixLieAlgebra:
    gam = octonions.spin_generators_9()
    mats = [gam[i] @ gam[j] for i in range(9) for j in range(i + 1, 9)]
    return MatrixLieAlgebra.from_matrices(np.array(mats), "spin(9)", rank=4)


def spin8_in_spin9() -> MatrixLieAlgebra:
    """spin(8) in spin(9) on R^16, acting by the two half-spin modules on R^8 + R^8."""
    gam = octonions.spin_generators_9()
    mats = [gam[i] @ gam[j] for i in range(8) for j in range(i + 1, 8)]
    return MatrixLieAlgebra.from_matrices(np.array(mats), "spin(8)", rank=4)


def adjoint_su3_in_so8() -> MatrixLieAlgebra:
    return adjoint_embedding(build_classical("su", 3), "ad su(3)")


def sp_times_sp1(n: int) -> MatrixLieAlgebra:
    """sp(n) + sp(1) on H^n = R^{4n}: left matrix action plus right scalar multiplication."""
    left = build_classical("sp", n)
    right = []
    for unit in (1, 2, 3):
        # Right multiplication by a unit quaternion u: R_u = transpose-conjugate form of L_u.
        r = np.zeros((4, 4))
        for col in range(4):
            e = np.zeros(4)
            e[col] = 1.0
            r[:, col] = octonions._qmul(e, np.eye(4)[unit])
        right.append(np.kron(np.eye(n), r))
    mats = np.concatenate([left.mats, np.array(right)])
    return MatrixLieAlgebra.from_matrices(mats, f"sp({n})+sp(1)")


def embed(spec: EmbeddingSpec, components: Sequence[MatrixLieAlgebra | None] = ()) -> MatrixLieAlgebra:
    """Build the image algebra described by ``spec`` and check bracket closure."""
    kind = spec.kind
    comps = list(components)
    if kind is EmbeddingKind.BlockDiagonal:
        out = block_diagonal(comps, spec.params or None)
    elif kind is EmbeddingKind.TensorProduct:
        if len(comps) != 2:
            raise EmbeddingError("TensorProduct takes two components")
        out = tensor_product(comps[0], comps[1])
    elif kind is EmbeddingKind.RealifyComplex:
        (a,) = comps
        if a.field != "real":
            raise EmbeddingError("RealifyComplex expects a real matrix algebra")
        out = MatrixLieAlgebra.from_matrices(np.kron(a.mats, np.eye(2)), f"{a.label}_C", field="complex")
    elif kind is EmbeddingKind.RealifyQuaternion:
        (a,) = comps
        if a.field == "real":
            mats = np.kron(a.mats, np.eye(4))
        elif a.field == "complex":
            z = complexify(a.mats)
            mats = np.kron(z.real, np.eye(4)) + np.kron(z.imag, QUAT_UNITS[1])
        else:
            raise EmbeddingError("RealifyQuaternion expects a real or complex algebra")
        out = MatrixLieAlgebra.from_matrices(mats, f"{a.label}_H", field="quaternion")
    elif kind is EmbeddingKind.UnitaryInOrthogonal:
        out = build_classical("u", int(spec.params[0]))
    elif kind is EmbeddingKind.OrthogonalInUnitary:
        n = int(spec.params[0])
        out = embed(EmbeddingSpec(EmbeddingKind.RealifyComplex), [build_classical("so", n)])
    elif kind is EmbeddingKind.SymplecticInUnitary:
        n = int(spec.params[0])
        # Interleave so the quaternionic structure pairs complex coordinates (2i, 2i+1).
        perm = np.ravel(np.column_stack([np.arange(n), np.arange(n, 2 * n)]))
        z = quaternion_to_complex(build_classical("sp", n).mats)[:, perm][:, :, perm]
        out = MatrixLieAlgebra.from_matrices(realify_complex(z), f"sp({n})", field="complex")
    elif kind is EmbeddingKind.Diagonal:
        (a,) = comps
        copies = int(spec.params[0]) if spec.params else 2
        mats = np.array([np.kron(np.eye(copies), m) for m in a.mats])
        out = MatrixLieAlgebra.from_matrices(mats, f"diag{copies} {a.label}", field=a.field)
    elif kind is EmbeddingKind.G2InSO7:
        out = g2_in_so7()
    elif kind is EmbeddingKind.Spin7InSO8:
        out = spin7_in_so8()
    elif kind is EmbeddingKind.Spin9InSO16:
        out = spin9_in_so16()
    elif kind is EmbeddingKind.AdjointSU3InSO8:
        out = adjoint_su3_in_so8()
    elif kind is EmbeddingKind.ConjugateBy:
        (a,) = comps
        if spec.element is None:
            raise EmbeddingError("ConjugateBy needs an element")
        out = conjugate(a, spec.element)
    else:  # pragma: no cover
        raise EmbeddingError(f"unknown embedding {kind}")
    res = closure_residual(out, max_pairs=400)
    if res > 1e-8:
        raise EmbeddingError(f"{out.label}: bracket closure residual {res:.2e}")
    return out


# ---------------------------------------------------------------- structure

def fixed_subalgebra(alg: MatrixLieAlgebra, s: np.ndarray, sign: float = 1.0, label: str = "") -> MatrixLieAlgebra:
    """{X in alg : s X s^-1 = sign * X} for orthogonal s."""
    m = alg.mats
    img = np.einsum("ij,kjl,ml->kim", s, m, s, optimize=True) - sign * m
    coef = _null_coeffs(img.reshape(alg.dim, -1).T)
    mats = np.einsum("pk,kij->pij", coef, m)
    sub = MatrixLieAlgebra.from_matrices(mats, label, field=alg.field) if len(coef) else \
        MatrixLieAlgebra(alg.ambient_n, Subspace.zero(alg.ambient_n ** 2), label, 0, alg.field)
    return sub


def _null_coeffs(a: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal rows spanning the null space of the matrix a (columns are unknowns)."""
    if a.shape[1] == 0:
        return np.zeros((0, 0))
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    scale = s[0] if s.size and s[0] > 0 else 1.0
    r = int(np.sum(s > tol * scale))
    return vt[r:]


def intersect_algebras(a: MatrixLieAlgebra, b: MatrixLieAlgebra, label: str = "", tol: float = 1e-9):
    from .linalg import intersect
    if a.ambient_n != b.ambient_n:
        raise DimensionMismatch("algebras live in different ambients")
    sub = intersect(a.basis, b.basis, tol)
    return MatrixLieAlgebra(a.ambient_n, sub, label or f"{a.label}∩{b.label}")


def stabilizer(alg: MatrixLieAlgebra, v, label: str = "") -> MatrixLieAlgebra:
    """{X in alg : X v = 0}."""
    v = np.asarray(v, dtype=float)
    coef = _null_coeffs((alg.mats @ v).T)
    if not len(coef):
        return MatrixLieAlgebra(alg.ambient_n, Subspace.zero(alg.ambient_n ** 2), label, 0)
    return MatrixLieAlgebra.from_matrices(np.einsum("pk,kij->pij", coef, alg.mats), label or f"stab {alg.label}")


def ad_matrix(alg: MatrixLieAlgebra, x: np.ndarray) -> np.ndarray:
    """Matrix of ad_x on alg in its orthonormal basis (column j = coords of [x, B_j])."""
    m = alg.mats
    return alg.coords(x @ m - m @ x).T


def generic_element(alg: MatrixLieAlgebra, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return alg.element(rng.standard_normal(alg.dim))


def algebra_rank(alg: MatrixLieAlgebra, seeds: Sequence[int] = (0, 1, 2)) -> int:
    """Dimension of the centralizer of a generic element, agreed over several seeds."""
    if alg.rank_cache is not None:
        return alg.rank_cache
    if alg.dim == 0:
        return 0
    if len(seeds) < 3:
        raise ValueError("at least three seeds required")
    vals = []
    for s in seeds:
        ad = ad_matrix(alg, generic_element(alg, [s, 7919]))
        vals.append(alg.dim - numeric_rank(ad, 1e-9))
    if len(set(vals)) != 1:
        raise InconclusiveError(f"rank estimates disagree across seeds: {vals}")
    object.__setattr__(alg, "rank_cache", vals[0])
    return vals[0]


def exp_element(x: np.ndarray) -> np.ndarray:
    return expm(np.asarray(x, dtype=float))


def group_element(alg: MatrixLieAlgebra, seed, steps: int = 8) -> np.ndarray:
    """Product of ``steps`` exponentials of random unit-norm elements of alg."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    n = alg.ambient_n
    g = np.eye(n)
    if alg.dim == 0:
        return g
    rng = np.random.default_rng(seed)
    for _ in range(steps):
        x = alg.element(rng.standard_normal(alg.dim))
        x /= np.linalg.norm(x)
        g = g @ expm(x)
    err = np.abs(g.T @ g - np.eye(n)).max()
    if err > 1e-10:
        raise ArithmeticError(f"group element not orthogonal (defect {err:.1e})")
    return g


def adjoint_transport(g: np.ndarray, S: Subspace) -> Subspace:
    """{g^-1 X g : X in S} for orthogonal g."""
    g = np.asarray(g, dtype=float)
    n = g.shape[0]
    if g.shape != (n, n) or S.ambient_dim != n * n:
        raise DimensionMismatch("element and subspace sizes disagree")
    m = S.basis.reshape(-1, n, n)
    out = (g.T @ m @ g).reshape(S.dim, -1)
    return Subspace(S.ambient_dim, out, S.tol)
