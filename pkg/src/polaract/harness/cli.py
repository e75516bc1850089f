"""Command line interface.

Exit codes: 0 when every record passes (skips allowed), 1 when any record
fails, 2 when some record is inconclusive and none failed.
"""
from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from .. import action as act
from .. import rootsys, slicerep, symspace
from ..liealg import InconclusiveError
from . import fixtures, tables
from .report import FAIL, INCONCLUSIVE, PASS, Record, VerificationReport


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=d(1), help="sampling seed (default 1)")
    parser.add_argument("--samples", type=int, default=d(8), help="sample points per batch")
    parser.add_argument("--tol-accept", type=float, default=d(act.ACCEPT), help="accept threshold")
    parser.add_argument("--tol-reject", type=float, default=d(act.REJECT), help="reject threshold")
    parser.add_argument("--json", action="store_true", default=d(False), help="print a JSON report")
    parser.add_argument("--timing", action="store_true", default=d(False),
                        help="include elapsed seconds in JSON records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polaract", description=__doc__.splitlines()[0],
                                     allow_abbrev=False)
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common], allow_abbrev=False)

    p = add("spaces", "list the classical symmetric spaces")
    p.add_argument("action", choices=["list"])
    p.add_argument("--max-ambient", type=int, default=32)

    def action_args(p):
        p.add_argument("--space", required=True, help="e.g. BDI:3,4")
        p.add_argument("--subgroup", required=True, help='e.g. "block:so2+so5"')

    p = add("check-polar", "apply the polarity criterion")
    action_args(p)
    p.add_argument("--at-origin", action="store_true", help="evaluate only at the base point")

    p = add("cohom", "cohomogeneity of an action")
    action_args(p)
    p.add_argument("--expect", type=int, help="fail unless the cohomogeneity equals this")

    p = add("audit", "dimension bounds that rule out polarity")
    action_args(p)

    p = add("slice", "slice representation at a point")
    action_args(p)
    p.add_argument("--at", choices=["origin", "random"], default="origin")
    p.add_argument("--point", type=int, default=0, help="sample index for --at random")
    p.add_argument("--decompose", action="store_true")

    p = add("orbits-match", "sampled evidence that two subgroups have the same orbits")
    p.add_argument("--space", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("bds", "extended-diagram deletions of a root system")
    p.add_argument("--type", required=True, help="e.g. E6")
    p.add_argument("--delete", type=int, help="vertex to delete (0 is the lowest-root vertex)")

    p = add("weyl-dim", "Weyl dimension formula")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True, help="comma-separated, e.g. 0,1,0")

    p = add("mrk-slice", "root-level isotropy and slice of two maximal-rank subsystems")
    p.add_argument("--type", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--s2", required=True)

    p = add("verify", "verify an encoded table")
    p.add_argument("--table", required=True, choices=[*tables.TABLE_IDS, "all"])
    p.add_argument("--max-ambient", type=int, default=32)

    p = add("fixture", "registered fixtures")
    p.add_argument("action", choices=["run", "list"])
    p.add_argument("id", nargs="?", default="all")
    return parser


def _single(name: str, rid: str, outcome: str, expected, measured, residuals=None, seed=None, note=""):
    rep = VerificationReport(name)
    rep.add(Record(rid, outcome, expected, measured, residuals or {}, seed, note))
    return rep


def _action(args):
    return tables.make_action(args.space, args.subgroup, args.seed, args.samples)


def _cmd_spaces(args):
    rep = VerificationReport("spaces")
    for s in symspace.catalog(args.max_ambient):
        t = symspace.parse_space(s) if symspace.ambient_of(s) <= 16 else None
        measured = {"ambient": symspace.ambient_of(s)}
        if t is not None:
            measured.update(dim_p=t.p.dim, rank=t.expected_rank())
        rep.add(Record(s, PASS, None, measured))
    return rep


def _cmd_check_polar(args):
    a = _action(args)
    fn = act.check_polar_at_origin if args.at_origin else act.check_polar
    r = fn(a, args.tol_accept, args.tol_reject)
    outcome = {act.POLAR_HYPERPOLAR: PASS, act.INCONCLUSIVE: INCONCLUSIVE}.get(r.verdict, FAIL)
    d = r.to_dict()
    res = {k: d.pop(k) for k in ("lie_triple_residual", "orthogonality_residual", "flatness_residual",
                                 "min_violation")}
    return _single("check-polar", a.label, outcome, None, d, res, args.seed, r.note)


def _cmd_cohom(args):
    a = _action(args)
    c = act.cohomogeneity(a)
    ok = args.expect is None or c == args.expect
    return _single("cohom", a.label, PASS if ok else FAIL, args.expect, {"cohomogeneity": c}, seed=args.seed)


def _cmd_audit(args):
    a = _action(args)
    au = act.dimension_audit(a)
    return _single("audit", a.label, FAIL if au["polar_excluded"] else PASS, None, au, seed=args.seed)


def _cmd_slice(args):
    a = _action(args)
    g = np.eye(a.pair.n) if args.at == "origin" else a.sample_point(args.point)
    rep = slicerep.slice_representation(a, g)
    measured = {"isotropy_dim": rep.algebra.dim, "carrier_dim": rep.dim,
                "slice_cohomogeneity": slicerep.linear_cohomogeneity(rep)}
    res = {"homomorphism": rep.homomorphism_residual()}
    if args.decompose and rep.dim:
        dec = slicerep.decompose_modules(rep, seed=args.seed)
        measured.update(trivial_dim=dec.trivial.dim, summand_dims=sorted(dec.dims),
                        equivalent_pair=slicerep.has_equivalent_pair(rep, dec, seed=args.seed))
    return _single("slice", f"{a.label} at {args.at}", PASS, None, measured, res, args.seed)


def _cmd_orbits_match(args):
    a = tables.make_action(args.space, args.a, args.seed, args.samples)
    b = tables.make_action(args.space, args.b, args.seed, args.samples)
    ok, ev = act.orbits_match(a, b, points=max(args.samples, 8), angle_tol=args.tol_accept)
    return _single("orbits-match", f"{args.a} vs {args.b} on {args.space}", PASS if ok else FAIL, None,
                   {"orbits_match": ok, **ev}, seed=args.seed)


def _cmd_bds(args):
    t, r = rootsys.parse_type(args.type)
    sys_ = rootsys.build_root_system(t, r)
    rep = VerificationReport("bds")
    verts = range(r + 1) if args.delete is None else [args.delete]
    for v in verts:
        s = rootsys.borel_de_siebenthal(sys_, v)
        rep.add(Record(f"{sys_.name}/delete {v}", PASS, None,
                       {"label": s.label, "roots": len(s), "closed": s.is_closed(), "mark": ([1] + list(sys_.marks()))[v]}))
    return rep


def _cmd_weyl_dim(args):
    t, r = rootsys.parse_type(args.type)
    w = [int(x) for x in args.weight.split(",")]
    return _single("weyl-dim", f"{t}{r} {tuple(w)}", PASS, None, {"dimension": rootsys.weyl_dimension(t, r, w)})


def _cmd_mrk_slice(args):
    t, r = rootsys.parse_type(args.type)
    sys_ = rootsys.build_root_system(t, r)
    a = rootsys.find_subsystem(sys_, args.s)
    b = rootsys.relative_position(sys_, a, rootsys.find_subsystem(sys_, args.s2))
    iso, sl = rootsys.maximal_rank_slice(sys_, a, b)
    measured = {"S_roots": len(a), "S2_roots": len(b), "isotropy_roots": len(iso),
                "isotropy_dim": len(iso) + r, "slice_roots": len(sl)}
    return _single("mrk-slice", f"{sys_.name} {args.s} / {args.s2}", PASS, None, measured)


def _cmd_verify(args):
    ids = tables.TABLE_IDS if args.table == "all" else [args.table]
    rep = VerificationReport(f"verify {args.table} max_ambient={args.max_ambient} seed={args.seed}")
    for t in ids:
        rep.extend(tables.verify_table(t, args.max_ambient, args.seed, args.samples,
                                       args.tol_accept, args.tol_reject))
    return rep


def _cmd_fixture(args):
    if args.action == "list":
        rep = VerificationReport("fixtures")
        for fid in fixtures.fixture_ids():
            f = fixtures.FIXTURES[fid]
            rep.add(Record(fid, PASS, None, {"description": f.description, "anchor": f.anchor}))
        return rep
    if args.id == "all":
        return fixtures.run_all(args.seed, args.samples, args.tol_accept, args.tol_reject)
    return fixtures.run_fixture(args.id, args.seed, args.samples, args.tol_accept, args.tol_reject)


_COMMANDS = {"spaces": _cmd_spaces, "check-polar": _cmd_check_polar, "cohom": _cmd_cohom,
             "audit": _cmd_audit, "slice": _cmd_slice, "orbits-match": _cmd_orbits_match,
             "bds": _cmd_bds, "weyl-dim": _cmd_weyl_dim, "mrk-slice": _cmd_mrk_slice,
             "verify": _cmd_verify, "fixture": _cmd_fixture}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = _COMMANDS[args.command](args)
    except InconclusiveError as exc:
        report = _single(args.command, args.command, INCONCLUSIVE, None, None, note=str(exc))
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(report.to_json(timing=args.timing))
    else:
        for line in report.lines():
            print(line)
        for r in sorted(report.records, key=lambda r: r.id):
            if r.measured is not None and len(report.records) == 1:
                print(f"  measured: {r.measured}")
        if args.timing:
            print(f"elapsed {time.perf_counter() - t0:.2f}s")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
