#!/usr/bin/env python3
"""Recompute the largest minimal total dominating sets on the 4-row tori.

Pass --quick to stop after the 3-column case.
"""

import sys

from cyclecert.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce", "--suite", "n4", *sys.argv[1:]]))
