"""
Markovski chained stream transformation over a quasigroup.

With leader ℓ, a plaintext u₁…u_L is sent to v₁…v_L by

    v₁ = f(ℓ, u₁),    v_{i+1} = f(v_i, u_{i+1})

and recovered with the left division of the same quasigroup:

    u₁ = ℓ \\ v₁,     u_{i+1} = v_i \\ v_{i+1}

A message is one unbroken chain with a single leader. Symbol strings are
1-D integer arrays (any integer sequence is accepted as input).
"""

import logging
import operator
import numpy as np
from tqdm import tqdm
from .quasigroups import left_division
logger = logging.getLogger('quasigroup_elgamal.markovski')

##################################
# Custom errors
class SymbolRangeError(ValueError):
    pass

def validate_leader(leader, order):
    try:
        leader = operator.index(leader)
    except TypeError:
        raise SymbolRangeError("Leader must be an integer; received {!r}.".format(leader))
    if not 0 <= leader < order:
        raise SymbolRangeError("Leader {} is outside the alphabet 0..{}."
                               .format(leader, order-1))
    return leader

def validate_symbols(symbols, order):
    """Return `symbols` as an int64 array, checking every entry is < `order`."""
    arr = np.asarray(symbols).reshape(-1)
    if len(arr) and arr.dtype.kind not in 'iu':
        raise SymbolRangeError("Symbols must be integers; received dtype '{}'."
                               .format(arr.dtype))
    arr = arr.astype(np.int64)
    if len(arr) and (arr.min() < 0 or arr.max() >= order):
        i = int(np.flatnonzero((arr < 0) | (arr >= order))[0])
        raise SymbolRangeError("Symbol {} at position {} is outside the alphabet 0..{}."
                               .format(arr[i], i, order-1))
    return arr

def _chain(rows, leader, symbols, progress):
    prev = leader
    for u in tqdm(symbols.tolist(), disable=not progress, unit='sym',
                  leave=False):
        prev = rows[prev][u]
        yield prev

def iter_encrypt(q, leader, plain, progress=False):
    """Generator form of `encrypt`."""
    leader = validate_leader(leader, q.order)
    plain = validate_symbols(plain, q.order)
    return _chain(q.rows(), leader, plain, progress)

def iter_decrypt(q, leader, cipher, progress=False):
    """Generator form of `decrypt`."""
    leader = validate_leader(leader, q.order)
    cipher = validate_symbols(cipher, q.order)
    ld = left_division(q).rows()
    def unchain():
        prev = leader
        for v in tqdm(cipher.tolist(), disable=not progress, unit='sym',
                      leave=False):
            yield ld[prev][v]
            prev = v
    return unchain()

def encrypt(q, leader, plain, progress=False):
    """
    Markovski transformation of `plain` over `q`.

    Parameters
    ----------
    q: Quasigroup
    leader: int
        Initial element of the chain, in 0..n-1.
    plain: sequence of int
        Symbols in 0..n-1. May be empty.
    progress: bool
        Show a tqdm progress bar.

    Returns
    -------
    ndarray of int64, same length as `plain`.
    """
    return np.fromiter(iter_encrypt(q, leader, plain, progress),
                       dtype=np.int64, count=np.size(plain))

def decrypt(q, leader, cipher, progress=False):
    """Inverse of `encrypt`, computed with the left division of `q`."""
    return np.fromiter(iter_decrypt(q, leader, cipher, progress),
                       dtype=np.int64, count=np.size(cipher))
