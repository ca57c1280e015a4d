"""
check.py - The `check` command: cross-validation and structural checks on L(n,P).
"""

from .. import bll
from .. import validation
from ..app import EXIT_CHECK_FAILED, EXIT_ENGINE, EXIT_INVALID, EXIT_OK, POSET, SLOTS, WORKERS, arg, command
from ..render import render_report
from .common import fail, load_inputs, parse_workers


@command(
    'check', 'Compare engines and check the structural predictions on L(n,P)',
    POSET, SLOTS,
    arg('--char', action='append', default=[], help='Field characteristic; repeatable'),
    arg('--chars', default='', help='Comma separated characteristics, e.g. 0,2'),
    arg('--engine', default='', help='Comma separated engines to compare (default: all applicable)'),
    arg('--structural', action='store_true', default=True,
        help='Run the structural strand classifier (default)'),
    arg('--no-structural', dest='structural', action='store_false', help='Skip the structural classifier'),
    WORKERS,
)
def run_check(args):
    is_valid, error, characteristics = validation.validate_characteristics(args.char + [args.chars])
    if not is_valid:
        fail(error)
        return EXIT_INVALID
    is_valid, error, engines = validation.validate_engine_list(args.engine)
    if not is_valid:
        fail(error)
        return EXIT_INVALID
    workers = parse_workers(args)
    if workers is None:
        return EXIT_INVALID

    poset, n = load_inputs(args)
    if poset is None:
        return EXIT_INVALID

    report, error = bll.run_checks(poset, n, characteristics, engines or None, args.structural, workers)
    if report is None:
        fail(error)
        return EXIT_ENGINE
    print(render_report(report), end='')
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED
