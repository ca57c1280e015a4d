#!/usr/bin/env python3
"""
run.py - Main entry point for the lpbetti command-line tool

This script computes graded and multigraded Betti numbers of letterplace
ideals L(n,P) and checks them against each other and against the known
structure of their resolutions.

Usage:
    python run.py [-v] COMMAND POSET -n N [options]
    python run.py posets [--seed [--overwrite]]

Commands:
    betti        Print the graded Betti table
    multibetti   Print the nonzero multigraded Betti numbers
    check        Compare engines and run the structural checks
    info         Print invariants predicted from the poset
    gens         Print the generators of L(n,P) (or L(P,n) with --colp)
    posets       List the bundled posets (--seed writes the catalog posets first)

Options:
    -n N                  Number of letterplace slots (n >= 1)
    --engine NAME         auto, oracle, strand or tree (check: comma list)
    --char P              Field characteristic, 0 or a prime (repeatable for check)
    --chars LIST          Comma separated characteristics for check
    --format FMT          text, csv or json (betti)
    --convention NAME     ideal (default) or quotient table (betti)
    --multigraded         Per-multidegree lines instead of the graded table (betti)
    --workers W           Worker processes for per-multidegree work
    -v, --verbose         Log at DEBUG level
    --help                Show this help message and exit

Environment:
    LP_MAX_VERTICES       Replace the size guards (at your own risk)
    LP_LOG_LEVEL          Default logging level (default: WARNING)

Exit codes:
    0 success, 1 a check failed, 2 invalid input, 3 engine refused (size guard, not a forest)
"""

import logging
import sys

from lpbetti import app, config


def parse_arguments(argv=None):
    """Parse command-line arguments."""
    return app.build_parser().parse_args(argv)


if __name__ == '__main__':
    # Show help if --help is specified without a command
    if sys.argv[1:] == ['--help']:
        print(__doc__)
        sys.exit(0)

    args = parse_arguments()

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.default_log_level(),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    sys.exit(app.dispatch(args))
