#!/usr/bin/env python3
"""Search small rings for a noncommutative unit-central ring of stable
range 1.

Every finite built-in ring up to the given order is tested and its
(unit-central, sr1, commutative) triple printed.  The probe reports
consistency only: finding no counterexample proves nothing, and any hit
would be printed loudly for manual inspection.

Usage:
    python3 scripts/probe_open_problem.py [--max-order 16]
"""

import argparse
import sys

from ringlab.cli import run_command


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=16)
    args = parser.parse_args()
    return run_command(
        ["probe", "unit-central", "--max-order", str(args.max_order)]
    )


if __name__ == "__main__":
    sys.exit(main())
