#!/usr/bin/env python3
"""Run every registered verification oracle and print a status table.

Exits 1 if any oracle fails, so the script doubles as a CI gate:

    python3 scripts/run_verifications.py
    python3 scripts/run_verifications.py --match hadamard
"""

import argparse
import sys
import time

from signchange.oracles import list_oracles, run_oracle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--match", default="", help="only run oracles whose name contains this")
    args = parser.parse_args()

    names = [n for n in list_oracles() if args.match in n]
    if not names:
        print(f"no oracle matches {args.match!r}", file=sys.stderr)
        return 2

    width = max(len(n) for n in names)
    failures = 0
    total_checks = 0
    start = time.perf_counter()
    for name in names:
        report = run_oracle(name)
        total_checks += report.checks
        status = "PASS" if report.passed else "FAIL"
        note = report.details if report.passed else f"counterexample: {report.counterexample}"
        print(f"{name:<{width}}  {status}  {report.checks:>10,} checks  {note}")
        if not report.passed:
            failures += 1
    elapsed = time.perf_counter() - start
    print(f"\n{len(names)} oracles, {total_checks:,} checks, {failures} failures, {elapsed:.1f} s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
