"""
gens.py - The `gens` command: minimal generators of L(n,P) or L(P,n).
"""

from .. import bll
from ..app import EXIT_INVALID, EXIT_OK, POSET, SLOTS, arg, command
from .common import load_inputs


@command(
    'gens', 'Print the generators of L(n,P), one monomial per line',
    POSET, SLOTS,
    arg('--colp', action='store_true', help='Print the co-letterplace ideal L(P,n) instead'),
)
def run_gens(args):
    poset, n = load_inputs(args)
    if poset is None:
        return EXIT_INVALID
    print(bll.generators_text(poset, n, args.colp), end='')
    return EXIT_OK
