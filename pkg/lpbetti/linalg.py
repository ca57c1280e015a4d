"""
linalg.py - Exact matrix rank over Q and GF(p).

Characteristic 0 uses FLINT's integer matrices (exact, no floating point);
characteristic p uses FLINT's word-size modular matrices.
"""

# Third party imports
from flint import fmpz, fmpz_mat, nmod_mat

MAX_PRIME = 2 ** 31


def is_valid_characteristic(p: int) -> bool:
    """True iff p is 0 or a prime below 2^31."""
    if p == 0:
        return True
    return 1 < p < MAX_PRIME and bool(fmpz(p).is_prime())


def rank(rows, ncols: int, characteristic: int) -> int:
    """
    Rank of an integer matrix over the prime field of the given characteristic.

    Args:
        rows (list of list of int): The matrix, row by row
        ncols (int): Number of columns (needed when `rows` is empty)
        characteristic (int): 0 or a prime

    Returns:
        int: The rank
    """
    if not rows or ncols == 0:
        return 0
    if characteristic == 0:
        return fmpz_mat(rows).rank()
    reduced = [[entry % characteristic for entry in row] for row in rows]
    return nmod_mat(reduced, characteristic).rank()
