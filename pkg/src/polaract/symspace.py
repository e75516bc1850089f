"""Classical compact symmetric pairs with explicit involution matrices."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import liealg
from .liealg import InconclusiveError, MatrixLieAlgebra, algebra_rank, build_classical, realify_complex
from .linalg import DEFAULT_TOL, Subspace, numeric_rank, orthonormalize

# (dim p, rank) as functions of the type parameters.
CLASSICAL_TYPES = {
    "AI": (lambda n: (n - 1) * (n + 2) // 2, lambda n: n - 1),
    "AII": (lambda n: (n - 1) * (2 * n + 1), lambda n: n - 1),
    "AIII": (lambda p, q: 2 * p * q, lambda p, q: min(p, q)),
    "BDI": (lambda p, q: p * q, lambda p, q: min(p, q)),
    "CI": (lambda n: n * (n + 1), lambda n: n),
    "CII": (lambda p, q: 4 * p * q, lambda p, q: min(p, q)),
    "DIII": (lambda n: n * (n - 1), lambda n: n // 2),
    "G": (lambda: 8, lambda: 2),
}

ARITY = {"AI": 1, "AII": 1, "AIII": 2, "BDI": 2, "CI": 1, "CII": 2, "DIII": 1, "G": 0}


class CartanError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SymmetricPair:
    """g = k + p for the involution X -> s X s^-1."""

    g: MatrixLieAlgebra
    theta_matrix: np.ndarray
    k: MatrixLieAlgebra
    p: Subspace
    label: str
    space_type: str = ""
    params: tuple = ()

    @property
    def n(self) -> int:
        return self.g.ambient_n

    @property
    def p_mats(self) -> np.ndarray:
        return self.p.basis.reshape(-1, self.n, self.n)

    def involution(self, x: np.ndarray) -> np.ndarray:
        s = self.theta_matrix
        return s @ x @ np.linalg.inv(s)

    def expected_dim_p(self) -> int | None:
        if self.space_type in CLASSICAL_TYPES:
            return CLASSICAL_TYPES[self.space_type][0](*self.params)
        return None

    def expected_rank(self) -> int | None:
        if self.space_type in CLASSICAL_TYPES:
            return CLASSICAL_TYPES[self.space_type][1](*self.params)
        return None

    def __repr__(self):
        return f"SymmetricPair({self.label}, dim p={self.p.dim}, N={self.n})"


def symmetric_pair_from_involution(g: MatrixLieAlgebra, s: np.ndarray, label: str = "",
                                   space_type: str = "", params: tuple = ()) -> SymmetricPair:
    """Split g into the +-1 eigenspaces of conjugation by the orthogonal matrix s."""
    s = np.asarray(s, dtype=float)
    if np.abs(s.T @ s - np.eye(len(s))).max() > 1e-12:
        raise CartanError("involution matrix must be orthogonal")
    image = np.einsum("ij,kjl,ml->kim", s, g.mats, s, optimize=True)
    if g.membership_residual(image) > 1e-10:
        raise CartanError("conjugation by s does not preserve g")
    k = liealg.fixed_subalgebra(g, s, +1.0, label=f"k[{label}]")
    p = liealg.fixed_subalgebra(g, s, -1.0).basis
    if k.dim + p.dim != g.dim:
        raise CartanError("conjugation by s is not an involution on g")
    return SymmetricPair(g, s, k, p, label, space_type, params)


def _complex_conj(n: int) -> np.ndarray:
    return np.kron(np.eye(n), np.diag([1.0, -1.0]))


def _ipq(p: int, q: int) -> np.ndarray:
    return np.diag([1.0] * p + [-1.0] * q)


def involution_matrix(space_type: str, *params: int) -> tuple[MatrixLieAlgebra, np.ndarray]:
    """The ambient algebra g and an orthogonal matrix s realizing the involution."""
    t = space_type
    if t == "AI":
        (n,) = params
        return build_classical("su", n), _complex_conj(n)
    if t == "AII":
        (n,) = params
        # Quaternionic structure pairing complex coordinates (2i, 2i+1).
        j = realify_complex(np.kron(np.eye(n), liealg.EPS2))
        return build_classical("su", 2 * n), j @ _complex_conj(2 * n)
    if t == "AIII":
        p, q = params
        return build_classical("su", p + q), np.kron(_ipq(p, q), np.eye(2))
    if t == "BDI":
        p, q = params
        return build_classical("so", p + q), _ipq(p, q)
    if t == "CI":
        (n,) = params
        return build_classical("sp", n), np.kron(np.eye(n), liealg.QUAT_UNITS[1])
    if t == "CII":
        p, q = params
        return build_classical("sp", p + q), np.kron(_ipq(p, q), np.eye(4))
    if t == "DIII":
        (n,) = params
        return build_classical("so", 2 * n), np.kron(np.eye(n), liealg.EPS2)
    if t == "G":
        return liealg.g2_in_so7(), np.diag([1.0, 1, 1, -1, -1, -1, -1])
    raise ValueError(f"unknown space type {space_type}")


def _check_range(t: str, params: Sequence[int]):
    if t not in ARITY:
        raise ValueError(f"unknown space type {t}")
    if len(params) != ARITY[t]:
        raise ValueError(f"{t} takes {ARITY[t]} parameter(s), got {len(params)}")
    if any(int(x) != x or x < 1 for x in params):
        raise ValueError("parameters must be positive integers")
    if t in ("AI", "AII", "DIII") and params[0] < 2:
        raise ValueError(f"{t} needs n >= 2")
    if t == "BDI" and sum(params) < 3:
        raise ValueError("BDI needs p + q >= 3")


def build_symmetric_pair(space_type: str, *params: int) -> SymmetricPair:
    """Classical type-I pair, e.g. build_symmetric_pair("BDI", 2, 5)."""
    _check_range(space_type, params)
    g, s = involution_matrix(space_type, *params)
    label = space_type + ("(" + ",".join(map(str, params)) + ")" if params else "")
    pair = symmetric_pair_from_involution(g, s, label, space_type, tuple(params))
    exp = pair.expected_dim_p()
    if exp is not None and exp != pair.p.dim:
        raise CartanError(f"{label}: dim p = {pair.p.dim}, expected {exp}")
    return pair


_SPACE_RE = re.compile(r"^\s*([A-Z]+)\s*(?::\s*([\d,\s]*))?$")


def parse_space(text: str) -> SymmetricPair:
    """Parse strings like "BDI:3,4", "AI:3" or "G"."""
    m = _SPACE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse space {text!r}")
    params = tuple(int(x) for x in m.group(2).split(",") if x.strip()) if m.group(2) else ()
    return build_symmetric_pair(m.group(1), *params)


def cartan_residuals(pair: SymmetricPair, max_pairs: int | None = None, seed: int = 0) -> dict[str, float]:
    """Residuals of [k,k] in k, [k,p] in p, [p,p] in k (relative to |X||Y|), and of k perp p.

    With ``max_pairs`` set, each bracket check uses at most that many seeded random basis pairs.
    """
    k = pair.k.mats
    p = pair.p_mats
    p_alg = MatrixLieAlgebra(pair.n, pair.p, "p")
    rng = np.random.default_rng(seed)

    def worst(a, b, target):
        if len(a) == 0 or len(b) == 0:
            return 0.0
        if max_pairs is not None and len(a) * len(b) > max_pairs:
            ia, ib = rng.integers(len(a), size=max_pairs), rng.integers(len(b), size=max_pairs)
            x, y = a[ia], b[ib]
        else:
            x, y = np.repeat(a, len(b), axis=0), np.tile(b, (len(a), 1, 1))
        # Scaled by |X||Y| so that nearly commuting pairs do not amplify rounding noise.
        scale = np.linalg.norm(x, axis=(1, 2)) * np.linalg.norm(y, axis=(1, 2))
        br = (x @ y - y @ x).reshape(len(x), -1)
        basis = target.basis.basis
        res = np.linalg.norm(br - (br @ basis.T) @ basis, axis=1)
        return float((res / scale).max())

    orth = float(np.abs(pair.k.basis.basis @ pair.p.basis.T).max()) if k.size and p.size else 0.0
    return {"kk": worst(k, k, pair.k), "kp": worst(k, p, p_alg), "pp": worst(p, p, pair.k),
            "orthogonality": orth}


def is_lie_triple(nu: Subspace, pair: SymmetricPair, tol: float = 1e-6) -> tuple[bool, float]:
    """Check [[nu, nu], nu] in nu; returns (verdict, residual).

    The residual is the largest relative distance from nu of [Y, Z] with Y
    running over an orthonormal basis of [nu, nu] and Z over a basis of nu.
    """
    if nu.ambient_dim != pair.p.ambient_dim:
        raise ValueError("nu lives in the wrong ambient space")
    if nu.dim and max(pair.p.residual(b) for b in nu.basis) > 1e-8:
        raise ValueError("nu is not contained in p")
    res = triple_residual(nu, pair.n)
    return res < tol, res


def bracket_span(nu: Subspace, n: int) -> Subspace:
    """Orthonormal basis of [nu, nu]."""
    x = nu.basis.reshape(-1, n, n)
    m = len(x)
    if m < 2:
        return Subspace.zero(n * n)
    iu = np.triu_indices(m, 1)
    br = (np.einsum("aij,bjk->abik", x, x) - np.einsum("bij,ajk->abik", x, x))[iu].reshape(len(iu[0]), -1)
    # nu has an orthonormal basis, so brackets are O(1); drop rounding noise.
    br = br[np.linalg.norm(br, axis=1) > 1e-9]
    return orthonormalize(br, 1e-9) if len(br) else Subspace.zero(n * n)


def triple_residual(nu: Subspace, n: int, skip: float = 1e-9) -> float:
    x = nu.basis.reshape(-1, n, n)
    s = bracket_span(nu, n)
    if s.dim == 0:
        return 0.0
    y = s.basis.reshape(-1, n, n)
    trip = (np.einsum("aij,bjk->abik", y, x) - np.einsum("bij,ajk->abik", x, y)).reshape(-1, n * n)
    norms = np.linalg.norm(trip, axis=1)
    ok = norms > skip
    if not ok.any():
        return 0.0
    t = trip[ok]
    dist = np.linalg.norm(t - (t @ nu.basis.T) @ nu.basis, axis=1)
    return float((dist / norms[ok]).max())


def _p_ad_matrix(pair: SymmetricPair, x: np.ndarray) -> np.ndarray:
    p = pair.p_mats
    return (x @ p - p @ x).reshape(len(p), -1)


def space_rank(pair: SymmetricPair, seeds: Sequence[int] = (0, 1, 2)) -> int:
    """Dimension of the centralizer in p of a generic element of p (multi-seed)."""
    if len(seeds) < 3:
        raise ValueError("at least three seeds required")
    vals = []
    for s in seeds:
        rng = np.random.default_rng([s, 104729])
        x = np.tensordot(rng.standard_normal(pair.p.dim), pair.p_mats, axes=1)
        vals.append(pair.p.dim - numeric_rank(_p_ad_matrix(pair, x), 1e-9))
    if len(set(vals)) != 1:
        raise InconclusiveError(f"space rank disagrees across seeds: {vals}")
    return vals[0]


def maximal_abelian(pair: SymmetricPair, seed: int = 0) -> Subspace:
    """Centralizer in p of a generic element of p."""
    rng = np.random.default_rng([seed, 104729])
    x = np.tensordot(rng.standard_normal(pair.p.dim), pair.p_mats, axes=1)
    coef = liealg._null_coeffs(_p_ad_matrix(pair, x).T)
    return orthonormalize(coef @ pair.p.basis)


def section_dim_bound(pair: SymmetricPair) -> int:
    """rk(g) + rk(k)."""
    return algebra_rank(pair.g) + algebra_rank(pair.k)


def catalog(max_ambient: int = 32) -> list[str]:
    """Space strings for the classical pairs up to a realified ambient size."""
    out = []
    for n in range(2, max_ambient):
        if 2 * n <= max_ambient:
            out.append(f"AI:{n}")
        if 4 * n <= max_ambient:
            out.append(f"AII:{n}")
        if 4 * n <= max_ambient:
            out.append(f"CI:{n}")
        if 2 * n <= max_ambient:
            out.append(f"DIII:{n}")
    for p in range(1, max_ambient):
        for q in range(p, max_ambient):
            if 2 * (p + q) <= max_ambient:
                out.append(f"AIII:{p},{q}")
            if p + q <= max_ambient and p + q >= 3:
                out.append(f"BDI:{p},{q}")
            if 4 * (p + q) <= max_ambient:
                out.append(f"CII:{p},{q}")
    out.append("G")
    return out


def ambient_of(space: str) -> int:
    """Realified ambient size N of a space string without building it."""
    m = _SPACE_RE.match(space)
    t = m.group(1)
    params = [int(x) for x in m.group(2).split(",") if x.strip()] if m.group(2) else []
    return {"AI": lambda n: 2 * n, "AII": lambda n: 4 * n, "AIII": lambda p, q: 2 * (p + q),
            "BDI": lambda p, q: p + q, "CI": lambda n: 4 * n, "CII": lambda p, q: 4 * (p + q),
            "DIII": lambda n: 2 * n, "G": lambda: 7}[t](*params)
