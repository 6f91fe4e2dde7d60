#!/usr/bin/env python3
"""Run the full law-check harness and write the JSON report.

Usage:
    python scripts/run_harness.py [report.json] [--jobs N]

Equivalent to `coidem verify --out report.json`, kept as a script so the
default experiment is one command away from a fresh checkout.
"""

import sys

from coidem.cli import main

if __name__ == "__main__":
    argv = sys.argv[1:]
    out = argv[0] if argv and not argv[0].startswith("-") else "report.json"
    rest = argv[1:] if argv and not argv[0].startswith("-") else argv
    sys.exit(main(["verify", "--out", out, *rest]))
