"""Root systems with exact integer data, Borel-de Siebenthal subsystems and Weyl's dimension formula.

Roots are stored doubled so that every coordinate is an integer (the E8
half-integer roots become +-1 vectors). Simple roots are numbered as follows:
Bourbaki for A, B, C, D and G2; F4 with alpha1, alpha2 short; E6 as the chain
1-2-3-4-5 with 6 attached to 3; E7 as the chain 1-...-6 with 7 attached to 3;
E8 as the chain 1-...-7 with 8 attached to 5.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

TYPES = ("A", "B", "C", "D", "E", "F", "G")


def _sym(vectors):
    out = set()
    for v in vectors:
        v = tuple(int(x) for x in v)
        out.add(v)
        out.add(tuple(-x for x in v))
    return out


def _pm_pairs(d, scale=2):
    out = []
    for i, j in itertools.combinations(range(d), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * d
            v[i], v[j] = scale * si, scale * sj
            out.append(v)
    return out


def _e8_roots():
    roots = _pm_pairs(8)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(list(signs))
    return _sym(roots)


def _raw_roots(typ: str, n: int) -> set:
    if typ == "A":
        d = n + 1
        out = []
        for i, j in itertools.permutations(range(d), 2):
            v = [0] * d
            v[i], v[j] = 2, -2
            out.append(v)
        return _sym(out)
    if typ == "D":
        return _sym(_pm_pairs(n))
    if typ == "B":
        return _sym(_pm_pairs(n) + [[2 if k == i else 0 for k in range(n)] for i in range(n)])
    if typ == "C":
        return _sym(_pm_pairs(n) + [[4 if k == i else 0 for k in range(n)] for i in range(n)])
    if typ == "G":
        out = []
        for i, j in itertools.permutations(range(3), 2):
            v = [0, 0, 0]
            v[i], v[j] = 2, -2
            out.append(v)
            w = [-2, -2, -2]
            w[i] = 4
            out.append(w)
        return _sym(out)
    if typ == "F":
        out = _pm_pairs(4)
        out += [[2 if k == i else 0 for k in range(4)] for i in range(4)]
        out += [list(s) for s in itertools.product((1, -1), repeat=4)]
        return _sym(out)
    if typ == "E":
        e8 = _e8_roots()
        if n == 8:
            return e8
        u = np.array([0, 0, 0, 0, 0, 0, 2, 2])
        w = np.array([0, 0, 0, 0, 0, 2, 0, 2])
        if n == 7:
            return {r for r in e8 if np.dot(r, u) == 0}
        if n == 6:
            return {r for r in e8 if np.dot(r, u) == 0 and np.dot(r, w) == 0}
    raise ValueError(f"no root system {typ}{n}")


def _valid(typ: str, n: int) -> bool:
    return ((typ == "A" and n >= 1) or (typ == "B" and n >= 2) or (typ == "C" and n >= 3)
            or (typ == "D" and n >= 4) or (typ == "E" and n in (6, 7, 8))
            or (typ == "F" and n == 4) or (typ == "G" and n == 2))


def _dot(a, b) -> int:
    return int(sum(x * y for x, y in zip(a, b)))


def _cartan(simple) -> np.ndarray:
    k = len(simple)
    c = np.zeros((k, k), dtype=int)
    for i in range(k):
        for j in range(k):
            c[i, j] = 2 * _dot(simple[i], simple[j]) // _dot(simple[j], simple[j])
    return c


def _positive_and_simple(roots, functional):
    pos = [r for r in roots if _dot(r, functional) > 0]
    pos_set = set(pos)
    simple = []
    for r in pos:
        decomposable = any(tuple(a - b for a, b in zip(r, s)) in pos_set for s in pos)
        if not decomposable:
            simple.append(r)
    return pos, simple


def _components(cartan: np.ndarray) -> list[list[int]]:
    k = len(cartan)
    seen, comps = set(), []
    for s in range(k):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(k):
                if w not in seen and cartan[v, w] != 0:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _chain_from(start, adj, allowed):
    order, prev, cur = [start], None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev and w in allowed]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_component(simple) -> tuple[str, int, list[int]]:
    """Type letter, rank and a numbering (indices into ``simple``) of a connected diagram."""
    k = len(simple)
    if k == 1:
        return "A", 1, [0]
    c = _cartan(simple)
    adj = {i: [j for j in range(k) if j != i and c[i, j] != 0] for i in range(k)}
    lengths = [_dot(s, s) for s in simple]
    bond = {(i, j): c[i, j] * c[j, i] for i in range(k) for j in adj[i]}
    leaves = [i for i in range(k) if len(adj[i]) == 1]
    branch = [i for i in range(k) if len(adj[i]) == 3]
    mult = max(bond.values())
    if mult == 3:
        short = 0 if lengths[0] < lengths[1] else 1
        return "G", 2, [short, 1 - short]
    if mult == 2:
        (i, j), = [(a, b) for (a, b), m in bond.items() if m == 2 and a < b]
        if k == 4 and len(adj[i]) == 2 and len(adj[j]) == 2:
            shorts = [x for x in range(k) if lengths[x] < max(lengths)]
            end = [x for x in leaves if x in shorts][0]
            return "F", 4, _chain_from(end, adj, set(range(k)))
        if k == 2:
            long_ = 0 if lengths[0] > lengths[1] else 1
            return "B", 2, [long_, 1 - long_]
        end = i if len(adj[i]) == 1 else j
        other_end = [x for x in leaves if x != end][0]
        order = _chain_from(other_end, adj, set(range(k)))
        typ = "B" if lengths[end] < max(lengths) else "C"
        return typ, k, order
    if not branch:
        return "A", k, _chain_from(leaves[0], adj, set(range(k)))
    b = branch[0]
    arms = []
    for start in adj[b]:
        arm = _chain_from(start, {**adj, start: [w for w in adj[start] if w != b]}, set(range(k)) - {b})
        arms.append(arm)
    arms.sort(key=len)
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        tail = arms[2]
        return "D", k, list(reversed(tail)) + [b, arms[0][0], arms[1][0]]
    if lens[:2] == [1, 2]:
        short, mid, long_ = arms
        if lens[2] == 2:  # E6: 1-2-3-4-5, 6 on 3
            return "E", 6, list(reversed(mid)) + [b] + long_ + short
        if lens[2] == 3:  # E7: 1-2-3-4-5-6, 7 on 3
            return "E", 7, list(reversed(mid)) + [b] + long_ + short
        if lens[2] == 4:  # E8: 1-...-7, 8 on 5
            return "E", 8, list(reversed(long_)) + [b] + mid + short
    raise ValueError("unrecognized Dynkin diagram")


def diagram_label(simple) -> str:
    """Canonical label such as 'A5+A1' of the root system with these simple roots."""
    if not simple:
        return "0"
    c = _cartan(simple)
    parts = []
    for comp in _components(c):
        t, r, _ = classify_component([simple[i] for i in comp])
        parts.append((t, r))
    parts.sort(key=lambda tr: (-tr[1], tr[0]))
    return "+".join(f"{t}{r}" for t, r in parts)


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: str
    rank: int
    roots: tuple
    simple_roots: tuple
    highest_root: tuple
    positive: frozenset = field(repr=False, default=frozenset())

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def index(self) -> dict:
        return _index(self)

    def coefficients(self, root) -> tuple[int, ...]:
        return _coefficient_table(self)[tuple(root)]

    def marks(self) -> tuple[int, ...]:
        return self.coefficients(self.highest_root)

    def __repr__(self):
        return f"RootSystem({self.name}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def build_root_system(typ: str, rank: int) -> RootSystem:
    typ = typ.upper()
    if not _valid(typ, rank):
        raise ValueError(f"invalid root system {typ}{rank}")
    roots = sorted(_raw_roots(typ, rank))
    d = len(roots[0])
    functional = [3 ** i for i in range(d)]
    pos, simple = _positive_and_simple(roots, functional)
    t, r, order = classify_component(simple)
    if (t, r) != (typ, rank):
        raise AssertionError(f"built {t}{r} instead of {typ}{rank}")
    simple = [simple[i] for i in order]
    sys_ = RootSystem(typ, rank, tuple(roots), tuple(simple), (), frozenset(pos))
    coeff = _coefficient_table(sys_)
    highest = max(pos, key=lambda x: sum(coeff[x]))
    object.__setattr__(sys_, "highest_root", highest)
    return sys_


@lru_cache(maxsize=None)
def _index(sys_: RootSystem) -> dict:
    return {r: i for i, r in enumerate(sys_.roots)}


@lru_cache(maxsize=None)
def _coefficient_table(sys_: RootSystem) -> dict:
    a = np.array(sys_.simple_roots, dtype=float).T
    out = {}
    for r in sys_.roots:
        c, *_ = np.linalg.lstsq(a, np.array(r, dtype=float), rcond=None)
        ci = tuple(int(round(x)) for x in c)
        if any(abs(x - y) > 1e-9 for x, y in zip(c, ci)):
            raise AssertionError("root not an integer combination of simple roots")
        out[r] = ci
    return out


def expected_root_count(typ: str, n: int) -> int:
    return {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1),
            "E": {6: 72, 7: 126, 8: 240}.get(n, 0), "F": 48, "G": 12}[typ]


# ---------------------------------------------------------------- subsets

@dataclass(frozen=True, eq=False)
class RootSubset:
    parent: RootSystem
    members: frozenset
    label: str = ""

    def __len__(self):
        return len(self.members)

    def is_closed(self) -> bool:
        idx = self.parent.index
        for a in self.members:
            for b in self.members:
                s = tuple(x + y for x, y in zip(a, b))
                if s in idx and s not in self.members:
                    return False
        return True

    def is_symmetric(self) -> bool:
        return all(tuple(-x for x in r) in self.members for r in self.members)

    def simple_roots(self) -> list:
        pos = [r for r in self.members if r in self.parent.positive]
        pos_set = set(pos)
        return [r for r in pos
                if not any(tuple(a - b for a, b in zip(r, s)) in pos_set for s in pos)]

    def rank(self) -> int:
        s = self.simple_roots()
        return int(np.linalg.matrix_rank(np.array(s, dtype=float))) if s else 0


def make_subset(sys_: RootSystem, members) -> RootSubset:
    members = frozenset(tuple(m) for m in members)
    sub = RootSubset(sys_, members)
    lab = diagram_label(sub.simple_roots())
    deficit = sys_.rank - sub.rank()
    if deficit:
        lab = (lab + "+" if lab != "0" else "") + f"T{deficit}"
    return RootSubset(sys_, members, lab)


def borel_de_siebenthal(sys_: RootSystem, delete_vertex: int) -> RootSubset:
    """Subsystem of the extended diagram with one vertex removed (0 is the lowest-root vertex).

    Removing vertex j >= 1 with mark m leaves the roots whose alpha_j
    coefficient is divisible by m; removing vertex 0 leaves everything.
    """
    if not 0 <= delete_vertex <= sys_.rank:
        raise ValueError(f"vertex {delete_vertex} out of range 0..{sys_.rank}")
    if delete_vertex == 0:
        return make_subset(sys_, sys_.roots)
    j = delete_vertex - 1
    m = sys_.marks()[j]
    return make_subset(sys_, [r for r in sys_.roots if sys_.coefficients(r)[j] % m == 0])


def levi_subsystem(sys_: RootSystem, delete_vertex: int) -> RootSubset:
    """Roots with zero alpha_j coefficient (ordinary diagram minus one vertex)."""
    j = delete_vertex - 1
    return make_subset(sys_, [r for r in sys_.roots if sys_.coefficients(r)[j] == 0])


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % p for p in range(2, int(math.isqrt(m)) + 1))


def maximal_rank_subsystems(sys_: RootSystem) -> dict[str, RootSubset]:
    """Proper maximal subsystems of full rank: deletions of prime-mark vertices."""
    out = {}
    for j, m in enumerate(sys_.marks(), start=1):
        if _is_prime(m):
            s = borel_de_siebenthal(sys_, j)
            out.setdefault(s.label, s)
    return out


def find_subsystem(sys_: RootSystem, label: str) -> RootSubset:
    """First subsystem with this label among extended-diagram and Levi deletions."""
    label = label.replace(" ", "")
    if label == sys_.name:
        return make_subset(sys_, sys_.roots)
    for j in range(1, sys_.rank + 1):
        for s in (borel_de_siebenthal(sys_, j), levi_subsystem(sys_, j)):
            if s.label == label:
                return s
    raise ValueError(f"no subsystem labelled {label} found in {sys_.name}")


@lru_cache(maxsize=None)
def _reflection_perms(sys_: RootSystem) -> list[np.ndarray]:
    idx = sys_.index
    perms = []
    for a in sys_.simple_roots:
        aa = _dot(a, a)
        p = np.empty(len(sys_.roots), dtype=int)
        for i, r in enumerate(sys_.roots):
            k = 2 * _dot(r, a) // aa
            p[i] = idx[tuple(x - k * y for x, y in zip(r, a))]
        perms.append(p)
    return perms


def weyl_orbit(sys_: RootSystem, sub: RootSubset, limit: int = 200000) -> list[frozenset]:
    """All Weyl-group images of a subset, as frozensets of root indices."""
    idx = sys_.index
    start = frozenset(idx[r] for r in sub.members)
    perms = _reflection_perms(sys_)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for p in perms:
            img = frozenset(int(p[i]) for i in cur)
            if img not in seen:
                seen.add(img)
                queue.append(img)
                if len(seen) > limit:
                    raise RuntimeError("Weyl orbit too large")
    return sorted(seen, key=lambda s: sorted(s))


def relative_position(sys_: RootSystem, S: RootSubset, S2: RootSubset) -> RootSubset:
    """Choose the Weyl conjugate of S2 used against S.

    Equal labels keep S2 = S (the isotropy case); otherwise the conjugate
    with the smallest intersection with S is taken.
    """
    if S.label == S2.label:
        return S
    idx = sys_.index
    s_idx = frozenset(idx[r] for r in S.members)
    best = min(weyl_orbit(sys_, S2), key=lambda o: (len(o & s_idx), sorted(o)))
    return RootSubset(sys_, frozenset(sys_.roots[i] for i in best), S2.label)


def maximal_rank_slice(sys_: RootSystem, S: RootSubset, S2: RootSubset):
    """(S ∩ S2, R minus (S ∪ S2)): isotropy roots and slice weights."""
    if S.parent is not sys_ or S2.parent is not sys_:
        raise ValueError("subsets belong to a different root system")
    iso = S.members & S2.members
    sl = frozenset(sys_.roots) - (S.members | S2.members)
    return iso, sl


# ---------------------------------------------------------------- Weyl formula

def weyl_dimension(typ: str, rank: int, highest_weight) -> int:
    """Dimension of the irreducible module with the given highest weight (fundamental-weight coordinates)."""
    sys_ = build_root_system(typ, rank)
    lam = [int(x) for x in highest_weight]
    if len(lam) != rank or any(x < 0 for x in lam):
        raise ValueError("weight must be a nonnegative integer vector of length rank")
    sl = [_dot(a, a) for a in sys_.simple_roots]
    num = Fraction(1)
    den = Fraction(1)
    for r in sys_.positive:
        c = sys_.coefficients(r)
        rl = _dot(r, r)
        cv = [Fraction(ci * li, rl) for ci, li in zip(c, sl)]
        num *= sum(x * (l + 1) for x, l in zip(cv, lam))
        den *= sum(cv)
    q = num / den
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {q}")
    return int(q)


def highest_root_weight(sys_: RootSystem) -> list[int]:
    """Fundamental-weight coordinates of the highest root."""
    h = sys_.highest_root
    return [2 * _dot(h, a) // _dot(a, a) for a in sys_.simple_roots]


def algebra_dimension(typ: str, rank: int) -> int:
    return expected_root_count(typ, rank) + rank


def parse_type(text: str) -> tuple[str, int]:
    text = text.strip().upper()
    return text[0], int(text[1:])
