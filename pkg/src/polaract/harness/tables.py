"""Load the encoded tables and verify every instantiable row."""
from __future__ import annotations

import itertools
import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from .. import action as act
from .. import liealg, rootsys, symspace
from ..liealg import InconclusiveError
from ..slicerep import verify_hermann_slice
from .formula import evaluate, holds
from .report import FAIL, INCONCLUSIVE, PASS, SKIPPED, Record, VerificationReport
from .subgroups import parse_subgroup

SCHEMA_VERSION = 1
TABLE_DIR = Path(__file__).with_name("tables")
TABLE_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "TS")
_TEMPLATE = re.compile(r"\{([^{}]*)\}")


@dataclass(frozen=True)
class TableEntry:
    table_id: str
    row_key: str
    parameters: dict = field(default_factory=dict)
    where: tuple = ()
    data: dict = field(default_factory=dict)
    skip: str = ""

    def instances(self):
        """Parameter assignments in the declared ranges that satisfy the constraints."""
        names = sorted(self.parameters)
        ranges = [range(int(self.parameters[k][0]), int(self.parameters[k][1]) + 1) for k in names]
        for values in itertools.product(*ranges):
            env = dict(zip(names, values))
            if all(holds(w, **env) for w in self.where):
                yield env

    def fill(self, template: str, env: dict) -> str:
        return _TEMPLATE.sub(lambda m: str(evaluate(m.group(1), **env)), str(template))

    def expect(self, name: str, env: dict) -> int:
        return evaluate(str(self.data[name]), **env)


@lru_cache(maxsize=None)
def load_table(table_id: str) -> tuple[str, tuple[TableEntry, ...]]:
    """(check kind, entries) of a table file."""
    path = TABLE_DIR / f"{table_id}.yaml"
    if not path.exists():
        raise FileNotFoundError(f"no table data for {table_id} at {path}")
    raw = yaml.safe_load(path.read_text())
    if raw.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"{path.name}: schema_version {raw.get('schema_version')} != {SCHEMA_VERSION}")
    entries = []
    for row in raw["rows"]:
        row = dict(row)
        entries.append(TableEntry(table_id, row.pop("key"), row.pop("params", {}) or {},
                                  tuple(row.pop("where", ())), row, row.pop("skip", "")))
    return raw["check"], tuple(entries)


def _instance_id(entry: TableEntry, env: dict) -> str:
    tag = ",".join(f"{k}={env[k]}" for k in sorted(env))
    return f"{entry.table_id}/{entry.row_key}" + (f"/{tag}" if tag else "")


def make_action(space: str, subgroup: str, seed: int = 1, samples: int = 8) -> act.GroupAction:
    pair = symspace.parse_space(space)
    return act.GroupAction(pair, parse_subgroup(subgroup, pair), seed, samples, f"{subgroup} on {space}")


def _algebra_dim(term, env) -> int:
    family, size = str(term[0]), evaluate(str(term[1]), **env)
    if family in rootsys.TYPES:
        return rootsys.algebra_dimension(family, size)
    return liealg.classical_dim(family, size)


def _algebra_rank(term, env) -> int:
    family, size = str(term[0]), evaluate(str(term[1]), **env)
    if family in rootsys.TYPES:
        return size
    return {"so": size // 2, "u": size, "su": size - 1, "sp": size}[family]


# ---------------------------------------------------------------- per-kind checks

def _check_dimension_rank(entry, env, **_):
    dim = entry.expect("dim", env)
    rank = entry.expect("rank", env)
    g_dim = sum(_algebra_dim(t, env) for t in entry.data["g"])
    k_dim = sum(_algebra_dim(t, env) for t in entry.data["k"])
    g_rank = sum(_algebra_rank(t, env) for t in entry.data["g"])
    measured = {"dim_g_minus_dim_k": g_dim - k_dim, "rank_bound": g_rank}
    ok = g_dim - k_dim == dim and 1 <= rank <= g_rank
    t = entry.data.get("type")
    if t in symspace.CLASSICAL_TYPES:
        f_dim, f_rank = symspace.CLASSICAL_TYPES[t]
        args = [env[k] for k in sorted(env)] if t not in ("AIII", "BDI", "CII") else [env["p"], env["q"]]
        measured["builder_formulas"] = [f_dim(*args), f_rank(*args)]
        ok = ok and measured["builder_formulas"] == [dim, rank]
    return ok, {"dim": dim, "rank": rank}, measured, {}, ""


def _check_weyl(entry, env, **_):
    t, r = rootsys.parse_type(entry.data["type"])
    got = rootsys.weyl_dimension(t, r, entry.data["weight"])
    return got == entry.data["degree"], entry.data["degree"], got, {}, ""


def _check_cohomogeneity(entry, env, seed, samples, accept, reject, polarity=False):
    a = make_action(entry.fill(entry.data["space"], env), entry.fill(entry.data["subgroup"], env),
                    seed, samples)
    expected = entry.expect("cohomogeneity", env)
    coh = act.cohomogeneity(a)
    if not polarity:
        return coh == expected, expected, coh, {}, ""
    rep = act.check_polar(a, accept, reject)
    res = {"lie_triple": rep.lie_triple_residual, "orthogonality": rep.orthogonality_residual,
           "flatness": rep.flatness_residual}
    ok = coh == expected and rep.verdict == act.POLAR_HYPERPOLAR
    return (ok, {"cohomogeneity": expected, "verdict": act.POLAR_HYPERPOLAR},
            {"cohomogeneity": coh, "verdict": rep.verdict}, res, rep.note)


def _check_orbit_equivalence(entry, env, seed, samples, accept, reject):
    space = entry.fill(entry.data["space"], env)
    a = make_action(space, entry.fill(entry.data["subgroup"], env), seed, samples)
    b = make_action(space, entry.fill(entry.data["reference"], env), seed, samples)
    match, ev = act.orbits_match(a, b, points=max(samples, 8), angle_tol=accept)
    rep = act.check_polar(a, accept, reject)
    res = {"max_principal_angle": max(ev["max_angles"]), "lie_triple": rep.lie_triple_residual,
           "orthogonality": rep.orthogonality_residual, "flatness": rep.flatness_residual}
    measured = {"orbits_match": match, "cohomogeneity": [ev["cohomogeneity_a"], ev["cohomogeneity_b"]],
                "verdict": rep.verdict}
    ok = match and rep.verdict == act.POLAR_HYPERPOLAR
    return ok, {"orbits_match": True, "verdict": act.POLAR_HYPERPOLAR}, measured, res, ""


def _check_hermann_slice(entry, env, seed, samples, **_):
    a = make_action(entry.fill(entry.data["space"], env), entry.fill(entry.data["subgroup"], env),
                    seed, samples)
    dim, rank = entry.expect("dim", env), entry.expect("rank", env)
    out = verify_hermann_slice(a, dim, rank)
    return (out["ok"], {"dim": dim, "rank": rank},
            {"dim": out["carrier_dim"], "rank": out["slice_cohomogeneity"]}, {}, entry.data.get("model", ""))


_CHECKS = {
    "dimension_rank": _check_dimension_rank,
    "weyl_dimension": _check_weyl,
    "cohomogeneity": _check_cohomogeneity,
    "cohomogeneity_and_polarity": lambda *a, **k: _check_cohomogeneity(*a, polarity=True, **k),
    "orbit_equivalence": _check_orbit_equivalence,
    "hermann_slice": _check_hermann_slice,
}
_SYMBOLIC = ("dimension_rank", "weyl_dimension")


def run_check(check: str, entry: TableEntry, env: dict, seed: int = 1, samples: int = 8,
              accept: float = act.ACCEPT, reject: float = act.REJECT) -> Record:
    rid = _instance_id(entry, env)
    t0 = time.perf_counter()
    try:
        ok, expected, measured, res, note = _CHECKS[check](entry, env, seed=seed, samples=samples,
                                                            accept=accept, reject=reject)
        outcome = PASS if ok else FAIL
    except InconclusiveError as exc:
        outcome, expected, measured, res, note = INCONCLUSIVE, None, None, {}, str(exc)
    return Record(rid, outcome, expected, measured, res, seed, note, time.perf_counter() - t0)


def verify_table(table_id: str, max_ambient: int = 32, seed: int = 1, samples: int = 8,
                 accept: float = act.ACCEPT, reject: float = act.REJECT) -> VerificationReport:
    """Run every instance of a table whose realified ambient size is at most ``max_ambient``."""
    check, entries = load_table(table_id)
    report = VerificationReport(f"verify {table_id} max_ambient={max_ambient} seed={seed}")
    for entry in entries:
        if entry.skip:
            report.add(Record(f"{table_id}/{entry.row_key}", SKIPPED, note=entry.skip))
            continue
        count = 0
        for env in entry.instances():
            if check not in _SYMBOLIC:
                space = entry.fill(entry.data["space"], env)
                if symspace.ambient_of(space) > max_ambient:
                    continue
            count += 1
            report.add(run_check(check, entry, env, seed, samples, accept, reject))
        if not count:
            report.add(Record(f"{table_id}/{entry.row_key}", SKIPPED,
                              note=f"no instance with ambient <= {max_ambient}"))
    return report
