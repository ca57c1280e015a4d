"""
multibetti.py - The `multibetti` command: nonzero multigraded Betti numbers, one per line.
"""

from .. import bll
from .. import validation
from ..app import EXIT_ENGINE, EXIT_INVALID, EXIT_OK, POSET, SLOTS, WORKERS, arg, command
from ..render import render_multigraded
from .common import fail, load_inputs, parse_workers


@command(
    'multibetti', 'Print "i | R_1;...;R_n | beta" for every nonzero multigraded Betti number',
    POSET, SLOTS,
    arg('--engine', default='auto', help='oracle, strand or tree (default: strand)'),
    arg('--char', default='0', help='Field characteristic, 0 or a prime (default: 0)'),
    WORKERS,
)
def run_multibetti(args):
    is_valid, error = validation.validate_engine(args.engine)
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

    pairs, error = bll.compute_multigraded(poset, n, args.engine, characteristic, workers)
    if pairs is None:
        fail(error)
        return EXIT_ENGINE
    print(render_multigraded(poset, pairs), end='')
    return EXIT_OK
