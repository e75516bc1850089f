"""Run all registered fixtures for a few seeds and print one line per fixture."""
import argparse
import sys

from polaract.harness import fixtures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="*", default=[1, 2, 3])
    args = ap.parse_args()
    code = 0
    for seed in args.seeds:
        rep = fixtures.run_all(seed=seed)
        for line in rep.lines():
            print(f"seed {seed}  {line}")
        code = max(code, rep.exit_code)
    return code


if __name__ == "__main__":
    sys.exit(main())
