"""Verify every encoded table and write one JSON report.

Usage: python3 scripts/reproduce_tables.py [--out report.json] [--max-ambient 32] [--seed 1]
"""
import argparse
import sys
from pathlib import Path

from polaract.harness import tables
from polaract.harness.report import VerificationReport


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("tables_report.json"))
    ap.add_argument("--max-ambient", type=int, default=32)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--tables", nargs="*", default=list(tables.TABLE_IDS))
    args = ap.parse_args()
    report = VerificationReport(f"tables max_ambient={args.max_ambient} seed={args.seed}")
    for tid in args.tables:
        rep = tables.verify_table(tid, args.max_ambient, args.seed)
        s = rep.summary()
        print(f"{tid}: pass={s['pass']} fail={s['fail']} inconclusive={s['inconclusive']} skipped={s['skipped']}")
        report.extend(rep)
    args.out.write_text(report.to_json() + "\n")
    print(f"wrote {args.out}")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
