"""Tolerance-aware real linear algebra on flattened matrix spaces.

Vectors live in R^D; for N x N matrices D = N*N with row-major flattening, so
the Euclidean inner product is the Frobenius form sum_ij X_ij Y_ij.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-9


class DimensionMismatch(ValueError):
    pass


def _as_rows(vectors, ambient_dim=None) -> np.ndarray:
    if isinstance(vectors, np.ndarray):
        arr = np.asarray(vectors, dtype=float)
        if arr.ndim == 1:
            arr = arr[None, :]
        elif arr.ndim > 2:
            arr = arr.reshape(arr.shape[0], -1)
    else:
        vectors = list(vectors)
        if not vectors:
            if ambient_dim is None:
                return np.zeros((0, 0))
            return np.zeros((0, ambient_dim))
        lengths = {np.size(v) for v in vectors}
        if len(lengths) != 1:
            raise DimensionMismatch(f"vectors of different lengths {sorted(lengths)}")
        arr = np.array([np.ravel(v) for v in vectors], dtype=float)
    if ambient_dim is not None and arr.shape[1] != ambient_dim:
        raise DimensionMismatch(f"expected length {ambient_dim}, got {arr.shape[1]}")
    return arr


@dataclass(frozen=True, eq=False)
class Subspace:
    """Orthonormal basis of a linear subspace of R^ambient_dim (rows of `basis`)."""

    ambient_dim: int
    basis: np.ndarray
    tol: float = DEFAULT_TOL
    _proj: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float).reshape(-1, self.ambient_dim)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    @classmethod
    def zero(cls, ambient_dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        return cls(ambient_dim, np.zeros((0, ambient_dim)), tol)

    @classmethod
    def full(cls, ambient_dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim), tol)

    def coords(self, v) -> np.ndarray:
        """Coordinates of v (or rows of v) in this basis."""
        v = np.asarray(v, dtype=float)
        if v.shape[-1] != self.ambient_dim:
            v = v.reshape(*v.shape[: v.ndim - 2], -1) if v.ndim >= 2 else v
        if v.shape[-1] != self.ambient_dim:
            raise DimensionMismatch(f"length {v.shape[-1]} != ambient {self.ambient_dim}")
        return v @ self.basis.T

    def residual(self, v) -> float:
        """Distance from v to the subspace."""
        v = np.ravel(np.asarray(v, dtype=float))
        return float(np.linalg.norm(v - project(v, self)))

    def orthogonal_complement(self) -> "Subspace":
        if self.dim == 0:
            return Subspace.full(self.ambient_dim, self.tol)
        # Full QR of the basis' transpose; trailing columns span the complement.
        q, _ = np.linalg.qr(self.basis.T, mode="complete")
        return Subspace(self.ambient_dim, q[:, self.dim:].T.copy(), self.tol)

    def complement_in(self, outer: "Subspace") -> "Subspace":
        """Orthogonal complement of self inside `outer` (self assumed contained)."""
        if outer.dim == 0:
            return Subspace.zero(self.ambient_dim, self.tol)
        c = outer.coords(self.basis)  # self in outer coordinates
        inner = Subspace(outer.dim, _orthonormal_rows(c, self.tol), self.tol)
        comp = inner.orthogonal_complement()
        return Subspace(self.ambient_dim, comp.basis @ outer.basis, self.tol)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return orthonormalize(np.vstack([self.basis, other.basis]), self.tol)


def _orthonormal_rows(vectors: np.ndarray, tol: float) -> np.ndarray:
    """Gram-Schmidt with reorthogonalization; drops numerically dependent rows."""
    if vectors.shape[0] == 0:
        return np.zeros((0, vectors.shape[1]))
    norms = np.linalg.norm(vectors, axis=1)
    scale = norms.max()
    if scale == 0.0:
        return np.zeros((0, vectors.shape[1]))
    cutoff = tol * scale
    accepted: list[np.ndarray] = []
    q = np.zeros((0, vectors.shape[1]))
    for v in vectors:
        w = v.copy()
        for _ in range(2):
            if accepted:
                w -= (q @ w) @ q
        r = np.linalg.norm(w)
        if r > cutoff:
            accepted.append(w / r)
            q = np.asarray(accepted)
    return q


def orthonormalize(vectors, tol: float = DEFAULT_TOL) -> Subspace:
    """Orthonormal basis for the numerically significant span of `vectors`.

    A vector is dropped when its residual after projecting out the previously
    accepted directions is below ``tol * max(||v||)``. Empty input gives the
    zero subspace.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    arr = _as_rows(vectors)
    return Subspace(arr.shape[1], _orthonormal_rows(arr, tol), tol)


def project(v, S: Subspace) -> np.ndarray:
    """Orthogonal projection of v onto S."""
    v = np.asarray(v, dtype=float)
    flat = v.reshape(-1)
    if flat.size != S.ambient_dim:
        raise DimensionMismatch(f"length {flat.size} != ambient {S.ambient_dim}")
    return ((S.basis @ flat) @ S.basis).reshape(v.shape)


def numeric_rank(vectors, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above ``tol * sigma_max``."""
    arr = _as_rows(vectors)
    if arr.size == 0:
        return 0
    s = np.linalg.svd(arr, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def principal_angles(A: Subspace, B: Subspace) -> np.ndarray:
    """Principal angles (radians, ascending) between A and B.

    Uses sines of the residual for small angles, which keeps angles near zero
    accurate to machine precision.
    """
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    if A.dim == 0 or B.dim == 0:
        return np.zeros(0)
    if A.dim > B.dim:
        A, B = B, A
    cross = A.basis @ B.basis.T
    cos = np.linalg.svd(cross, compute_uv=False)
    resid = A.basis - cross @ B.basis
    sin = np.linalg.svd(resid, compute_uv=False)[::-1]
    sin = np.concatenate([np.zeros(max(0, A.dim - sin.size)), sin])[: A.dim]
    cos = np.clip(cos, 0.0, 1.0)
    ang = np.where(cos > np.sqrt(0.5), np.arcsin(np.clip(sin, 0, 1)), np.arccos(cos))
    return np.sort(ang)


def intersect(A: Subspace, B: Subspace, tol: float | None = None) -> Subspace:
    """A ∩ B: directions of A whose distance to B is below tol."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    tol = A.tol if tol is None else tol
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(A.ambient_dim, tol)
    resid = A.basis - (A.basis @ B.basis.T) @ B.basis
    # Left singular vectors of the residual in A-coordinates; small singular
    # values are the sines of principal angles of directions near B.
    u, sines, _ = np.linalg.svd(resid, full_matrices=False)
    keep = u[:, sines < tol]
    vecs = keep.T @ A.basis
    return orthonormalize(vecs, tol) if vecs.shape[0] else Subspace.zero(A.ambient_dim, tol)


def same_span(A: Subspace, B: Subspace, angle_tol: float = 1e-6) -> bool:
    if A.dim != B.dim:
        return False
    ang = principal_angles(A, B)
    return bool(ang.size == 0 or ang.max() < angle_tol)
