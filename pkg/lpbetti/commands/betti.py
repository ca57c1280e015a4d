"""
betti.py - The `betti` command: graded Betti table of L(n,P).
"""

from .. import bll
from .. import validation
from ..app import EXIT_ENGINE, EXIT_INVALID, EXIT_OK, POSET, SLOTS, WORKERS, arg, command
from ..render import FORMATS, render_multigraded, render_table
from .common import fail, load_inputs, parse_workers


@command(
    'betti', 'Print the graded Betti table of L(n,P)',
    POSET, SLOTS,
    arg('--engine', default='auto', help='auto, oracle, strand or tree (default: auto)'),
    arg('--char', default='0', help='Field characteristic, 0 or a prime (default: 0)'),
    arg('--format', default='text', choices=FORMATS, help='Output format (default: text)'),
    arg('--convention', default='ideal', help='ideal or quotient table (default: ideal)'),
    arg('--multigraded', action='store_true', help='Print the nonzero multigraded Betti numbers instead'),
    WORKERS,
)
def run_betti(args):
    is_valid, error = validation.validate_engine(args.engine)
    if not is_valid:
        fail(error)
        return EXIT_INVALID
    is_valid, error = validation.validate_convention(args.convention)
    if not is_valid:
        fail(error)
        return EXIT_INVALID
    is_valid, error, characteristic = validation.validate_characteristic(args.char)
    if not is_valid:
        fail(error)
        return EXIT_INVALID
    workers = parse_workers(args)
    if workers is None:
        return EXIT_INVALID

    poset, n = load_inputs(args)
    if poset is None:
        return EXIT_INVALID

    if args.multigraded:
        pairs, error = bll.compute_multigraded(poset, n, args.engine, characteristic, workers)
        if pairs is None:
            fail(error)
            return EXIT_ENGINE
        print(render_multigraded(poset, pairs), end='')
        return EXIT_OK

    table, error = bll.compute_betti_table(poset, n, args.engine, characteristic, workers)
    if table is None:
        fail(error)
        return EXIT_ENGINE
    print(render_table(table, args.format, args.convention), end='')
    return EXIT_OK
