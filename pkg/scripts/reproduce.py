#!/usr/bin/env python3
"""Reproduce every bundled quantitative result in one run.

Equivalent to `tribrackets demo`; exits nonzero if any value drifts.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tribrackets.cli import main

if __name__ == "__main__":
    sys.exit(main(["demo"]))
