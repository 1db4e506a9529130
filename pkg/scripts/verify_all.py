#!/usr/bin/env python3
"""Run the full verification sweep; extra flags are passed through.

Usage: python scripts/verify_all.py [--config FILE] [--seed N] [--q LIST]
"""

import sys

from plucker.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", *sys.argv[1:]]))
