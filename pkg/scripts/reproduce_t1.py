#!/usr/bin/env python3
"""Recompute the paired domination minimums on the 5-row tori.

Pass --quick to stop after the 4-column case.
"""

import sys

from cyclecert.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce", "--suite", "t1", *sys.argv[1:]]))
