#!/usr/bin/env python3
"""Sweep every property over the built-in ring zoo.

Writes line-delimited JSON records (ring x property cells) and prints a
compact verdict table.  Equivalent to::

    ringlab sweep --rings builtin --properties all --out <file>

Usage:
    python3 scripts/sweep_zoo.py [--out sweep.jsonl] [--budget N]
"""

import argparse
import json
import sys

from ringlab.cli import run_command
from ringlab.properties import DEFAULT_BUDGET, PROPERTY_IDS
from ringlab.zoo import BUILTIN_SPECS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="sweep.jsonl")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = parser.parse_args()

    code = run_command([
        "sweep", "--rings", "builtin", "--properties", "all",
        "--out", args.out, "--budget", str(args.budget),
    ])

    with open(args.out) as fh:
        records = [json.loads(line) for line in fh]
    cells = {(r["ring"], r["ident"]): r["verdict"] for r in records}
    mark = {"holds": "+", "fails": "-", "unknown": "?"}

    width = max(len(s) for s in BUILTIN_SPECS) + 2
    header = " " * width + " ".join(f"{p[:10]:>10}" for p in PROPERTY_IDS)
    print(header)
    for spec in BUILTIN_SPECS:
        row = " ".join(
            f"{mark[cells[(spec, p)]]:>10}" for p in PROPERTY_IDS
        )
        print(f"{spec:<{width}}{row}")
    print("\nlegend: + holds   - fails   ? unknown")
    return code


if __name__ == "__main__":
    sys.exit(main())
