"""Parse subgroup strings into subalgebras of a symmetric pair's ambient algebra.

Grammar (whitespace ignored)::

    spec   := base ["@alpha"]
    base   := "k" | "g"
            | "sym:" TYPE [":" params]        fixed algebra of that involution
            | "block:" item ("+" item)*       block diagonal, intersected with g
            | "tensor:" item "*" item
            | "diag:" item ":" copies
            | "stab:" index                   stabilizer in g of a basis vector
            | "conj:" seed ":" spec           Ad(g0) of spec, g0 random in G
            | "g2" | "spin7" | "spin8" | "spin9" | "adsu3" | "spsp1:" n
    item   := so<n> | u<n> | su<n> | sp<n> | z<n> | ou<n> | ouz<n> | spu<n> | uq<n> | suq<n> | g2 | spin7

Item ambient sizes: so n, u/su 2n, sp 4n, z n (zero block), ou 2n (so(n) in
u(n)), ouz 2n (so(n) (x) u(1) in u(n)), spu 4n (sp(n) in u(2n)), uq 4n (u(n) in sp(n)),
suq 4n (su(n) in sp(n)), g2 7, spin7 8.
"""
from __future__ import annotations

import re

import numpy as np

from .. import liealg, symspace
from ..liealg import EmbeddingKind, EmbeddingSpec, MatrixLieAlgebra, build_classical, embed
from ..symspace import SymmetricPair

_ITEM = re.compile(r"^(so|u|su|sp|z|ouz|ou|spu|suq|uq)(\d+)$|^(g2|spin7)$")


def alpha_matrix(n: int) -> np.ndarray:
    a = np.eye(n)
    a[0, 0] = -1.0
    return a


def parse_item(text: str) -> tuple[MatrixLieAlgebra | None, int]:
    """Returns (algebra or None for a zero block, real block size)."""
    m = _ITEM.match(text.strip())
    if not m:
        raise ValueError(f"unknown subgroup item {text!r}")
    if m.group(3):
        alg = liealg.g2_in_so7() if m.group(3) == "g2" else liealg.spin7_in_so8()
        return alg, alg.ambient_n
    kind, n = m.group(1), int(m.group(2))
    if kind == "z":
        return None, n
    if kind in ("so", "su") and n <= 1:
        return None, n if kind == "so" else 2 * n
    if kind in ("so", "u", "su", "sp"):
        alg = build_classical(kind, n)
        return alg, alg.ambient_n
    if kind == "ou":
        alg = embed(EmbeddingSpec(EmbeddingKind.OrthogonalInUnitary, (n,)))
    elif kind == "ouz":
        base = embed(EmbeddingSpec(EmbeddingKind.OrthogonalInUnitary, (n,)))
        center = liealg.realify_complex(1j * np.eye(n))
        alg = MatrixLieAlgebra.from_matrices(np.concatenate([base.mats, center[None]]),
                                             f"so({n})*u(1)", field="complex")
    elif kind == "spu":
        alg = embed(EmbeddingSpec(EmbeddingKind.SymplecticInUnitary, (n,)))
    else:
        pair = symspace.build_symmetric_pair("CI", n)
        alg = MatrixLieAlgebra(pair.k.ambient_n, pair.k.basis, f"u({n})", field="complex")
        if kind == "suq":
            alg = derived_algebra(alg, f"su({n})")
    return alg, alg.ambient_n


def derived_algebra(alg: MatrixLieAlgebra, label: str) -> MatrixLieAlgebra:
    """[a, a], spanned by brackets of basis pairs."""
    m = alg.mats
    br = [m[i] @ m[j] - m[j] @ m[i] for i in range(len(m)) for j in range(i + 1, len(m))]
    br = [b for b in br if np.linalg.norm(b) > 1e-9]
    if not br:
        br = np.zeros((0, alg.ambient_n, alg.ambient_n))
    return MatrixLieAlgebra.from_matrices(np.array(br), label, field=alg.field)


def _restrict(alg: MatrixLieAlgebra, g: MatrixLieAlgebra, label: str) -> MatrixLieAlgebra:
    if alg.ambient_n != g.ambient_n:
        raise ValueError(f"{label}: ambient {alg.ambient_n} does not match {g.ambient_n}")
    if g.membership_residual(alg.mats) < 1e-10:
        return alg.relabel(label)
    return liealg.intersect_algebras(alg, g, label)


def parse_subgroup(text: str, pair: SymmetricPair) -> MatrixLieAlgebra:
    text = text.replace(" ", "")
    g = pair.g
    if text.endswith("@alpha"):
        inner = parse_subgroup(text[: -len("@alpha")], pair)
        out = liealg.conjugate(inner, alpha_matrix(g.ambient_n), inner.label + "@alpha")
        return _restrict(out, g, out.label)
    if text == "k":
        return pair.k.relabel(f"k[{pair.label}]")
    if text == "g":
        return g
    head, _, rest = text.partition(":")
    if head == "conj":
        seed, _, inner_text = rest.partition(":")
        inner = parse_subgroup(inner_text, pair)
        g0 = liealg.group_element(g, [int(seed), 4242], 10)
        return liealg.conjugate(inner, g0, f"conj{seed}({inner.label})")
    if head == "sym":
        t, _, prm = rest.partition(":")
        params = tuple(int(x) for x in prm.split(",") if x)
        _, s = symspace.involution_matrix(t, *params)
        if s.shape[0] != g.ambient_n:
            raise ValueError(f"sym:{rest} lives in ambient {s.shape[0]}, not {g.ambient_n}")
        return liealg.fixed_subalgebra(g, s, 1.0, f"sym:{rest}")
    if head == "block":
        items = [parse_item(x) for x in rest.split("+")]
        alg = liealg.block_diagonal([a for a, _ in items], [s for _, s in items], label=rest)
        return _restrict(alg, g, rest)
    if head == "tensor":
        a, b = (parse_item(x)[0] for x in rest.split("*"))
        return _restrict(liealg.tensor_product(a, b), g, rest)
    if head == "diag":
        item, _, copies = rest.partition(":")
        a = parse_item(item)[0]
        alg = embed(EmbeddingSpec(EmbeddingKind.Diagonal, (int(copies or 2),)), [a])
        return _restrict(alg, g, f"diag{copies}({item})")
    if head == "stab":
        v = np.zeros(g.ambient_n)
        v[int(rest)] = 1.0
        return liealg.stabilizer(g, v, f"stab e{rest}")
    if head == "spsp1":
        return _restrict(liealg.sp_times_sp1(int(rest)), g, text)
    named = {"g2": liealg.g2_in_so7, "spin7": liealg.spin7_in_so8, "spin8": liealg.spin8_in_spin9,
             "spin9": liealg.spin9_in_so16, "adsu3": liealg.adjoint_su3_in_so8}
    if text in named:
        return _restrict(named[text](), g, text)
    raise ValueError(f"cannot parse subgroup {text!r}")
