#!/usr/bin/env python3
"""Run the verification suite from a checkout and print a human summary.

Usage: python scripts/run_verify.py [--suite all] [--seed 42] [--timings]
"""

import argparse
import sys

from fockbridge.verify import VerifyConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--timings", action="store_true")
    args = ap.parse_args()

    report = run_suite(args.suite, VerifyConfig(seed=args.seed, timings=args.timings))
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status}  {check.name:32s} max_error={check.max_error:.3e} tolerance={check.tolerance:.1e}"
        if args.timings:
            line += f"  ({check.wall_time:.2f}s)"
        print(line)
    print(f"\n{'all checks passed' if report.passed else 'FAILURES PRESENT'} "
          f"({len(report.checks)} checks, seed {report.config.seed})")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
