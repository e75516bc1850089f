"""Octonions by Cayley-Dickson doubling and the Clifford generators built from them.

Basis e0..e7 with e0 = 1; the doubling (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
over the quaternions gives e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


def _qconj(q):
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def omul(x, y) -> np.ndarray:
    """Product of two octonions given as length-8 real vectors."""
    a, b = np.asarray(x[:4], float), np.asarray(x[4:], float)
    c, d = np.asarray(y[:4], float), np.asarray(y[4:], float)
    return np.concatenate([_qmul(a, c) - _qmul(_qconj(d), b), _qmul(d, a) + _qmul(b, _qconj(c))])


@lru_cache(maxsize=None)
def structure_constants() -> np.ndarray:
    """c[i, j, k] with e_i e_j = sum_k c[i, j, k] e_k."""
    eye = np.eye(8)
    c = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            c[i, j] = omul(eye[i], eye[j])
    c.setflags(write=False)
    return c


def left_mult(i: int) -> np.ndarray:
    """Matrix of x -> e_i x on R^8."""
    return structure_constants()[i].T.copy()


def g2_derivations() -> np.ndarray:
    """Basis (14, 7, 7) of derivations of the octonions acting on Im(O).

    Solves D(xy) = D(x) y + x D(y) over imaginary basis pairs as a null space
    in the 21 coordinates of so(7).
    """
    c = structure_constants()
    pairs = [(a, b) for a in range(7) for b in range(a + 1, 7)]
    gens = []
    for a, b in pairs:
        m = np.zeros((8, 8))
        m[1 + a, 1 + b] = -1.0
        m[1 + b, 1 + a] = 1.0
        gens.append(m)
    rows = []
    for i in range(1, 8):
        for j in range(1, 8):
            prod = c[i, j]
            blocks = []
            for m in gens:
                lhs = m @ prod
                rhs = c[:, j, :].T @ m[:, i] + c[i, :, :].T @ m[:, j]
                blocks.append(lhs - rhs)
            rows.append(np.array(blocks).T)
    system = np.vstack(rows)
    _, s, vt = np.linalg.svd(system)
    null = vt[np.sum(s > 1e-10 * s[0]):]
    mats = np.einsum("kp,pij->kij", null, np.array(gens))[:, 1:, 1:]
    return mats


def spin_generators_9() -> np.ndarray:
    """Nine symmetric anticommuting 16x16 involutions generating Cl(9) on R^16 = O + O.

    The first eight are off-diagonal in left multiplications, the ninth is the
    grading diag(I, -I); products of the first eight preserve both summands.
    """
    gam = []
    for i in range(8):
        L = left_mult(i)
        g = np.zeros((16, 16))
        g[:8, 8:] = L.T
        g[8:, :8] = L
        gam.append(g)
    gam.append(np.diag([1.0] * 8 + [-1.0] * 8))
    return np.array(gam)


def spin7_generators() -> np.ndarray:
    """Seven skew anticommuting 8x8 generators (left multiplication by e1..e7)."""
    return np.array([left_mult(i) for i in range(1, 8)])
