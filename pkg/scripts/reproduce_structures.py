#!/usr/bin/env python3
"""Recheck the transitive decomposition and partition catalogue.

Pass --quick to skip the larger complete graph.
"""

import sys

from cyclecert.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce", "--suite", "structures", *sys.argv[1:]]))
