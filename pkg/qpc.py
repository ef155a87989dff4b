#!/usr/bin/env python3
"""Command-line interface for the quantum function calculus and QTM compiler.

Usage:
    python qpc.py <subcommand> [options]
    python qpc.py --help
"""

import sys

from src.cli.dispatch import dispatch


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
