"""
posets.py - The `posets` command: the bundled poset files and their sizes.
"""

from .. import bll
from ..app import EXIT_INVALID, EXIT_OK, arg, command
from ..render import render_poset_list
from .common import fail


@command(
    'posets', 'List the bundled posets',
    arg('--seed', action='store_true', help='Write the catalog posets into the poset directory first'),
    arg('--overwrite', action='store_true', help='With --seed, replace existing files'),
)
def run_posets(args):
    rows, error = bll.list_posets(args.seed, args.overwrite)
    if rows is None:
        fail(error)
        return EXIT_INVALID
    print(render_poset_list(rows), end='')
    return EXIT_OK
