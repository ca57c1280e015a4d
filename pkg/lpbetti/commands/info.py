"""
info.py - The `info` command: invariants of L(n,P) predicted from P alone.
"""

from .. import bll
from ..app import EXIT_ENGINE, EXIT_INVALID, EXIT_OK, POSET, SLOTS, command
from ..render import render_summary
from .common import fail, load_inputs


@command('info', 'Print the predicted invariants of L(n,P)', POSET, SLOTS)
def run_info(args):
    poset, n = load_inputs(args)
    if poset is None:
        return EXIT_INVALID

    summary, error = bll.poset_summary(poset, n)
    if summary is None:
        fail(error)
        return EXIT_ENGINE
    print(render_summary(summary), end='')
    return EXIT_OK
