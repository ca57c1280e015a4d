"""
lpbetti - Betti numbers of letterplace ideals L(n,P) of finite posets.

The engines are hochster (reference oracle), strand (Betti polynomials) and
tree (recursion for rooted forests); bll wraps them for the command line.
"""

from .betti_table import BettiTable
from .hochster import Multidegree
from .poset import Poset, parse_poset
from .simplicial import FieldSpec

__all__ = ['BettiTable', 'FieldSpec', 'Multidegree', 'Poset', 'parse_poset']
