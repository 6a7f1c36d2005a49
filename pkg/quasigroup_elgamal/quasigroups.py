"""
Finite quasigroups given by their Cayley tables.

A quasigroup of order `n` is stored as an n×n integer array `table` with
``table[x, y] == f(x, y)``; the array must be a Latin square.

Isotopies act on tables as

    g(x, y) = γ⁻¹( f(α(x), β(y)) )

which is carried out as a chain of three table operations: new row `x` is
old row `α(x)`, then new column `y` is the intermediate column `β(y)`,
then every entry is mapped through γ⁻¹. `isotopy_stages` exposes the
three intermediate tables.
"""

import logging
import numpy as np
from .permutations import Permutation, DegreeMismatch, power, compose, inverse
logger = logging.getLogger('quasigroup_elgamal.quasigroups')

##################################
# Custom errors
class LatinSquareError(ValueError):
    """
    Raised when a table is not the Cayley table of a quasigroup.
    `axis` is 'row' or 'column' for duplicate entries (else None) and
    `index` the offending row or column.
    """
    def __init__(self, msg, axis=None, index=None):
        super().__init__(msg)
        self.axis = axis
        self.index = index

class Quasigroup:
    """
    Immutable quasigroup of order `n`. The table is validated on
    construction; use `validate` to build one from untrusted input.
    """
    def __init__(self, table):
        if isinstance(table, Quasigroup):
            table = table.table
        arr = _check_latin(table)
        arr.setflags(write=False)
        self._table = arr

    @property
    def table(self):
        return self._table

    @property
    def order(self):
        return self._table.shape[0]

    def __call__(self, x, y):
        return int(self._table[x, y])

    def __eq__(self, other):
        if not isinstance(other, Quasigroup):
            return NotImplemented
        return np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash(self._table.tobytes())

    def __repr__(self):
        return "Quasigroup(order={}, table={})".format(self.order, self._table.tolist())

    def rows(self):
        """Table as nested lists; faster than array indexing in scalar loops."""
        return self._table.tolist()

def _check_latin(table):
    try:
        arr = np.array(table)
    except ValueError:
        raise LatinSquareError("Cayley table must be a square array.")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise LatinSquareError("Cayley table must be a non-empty square array; "
                               "received shape {}.".format(arr.shape))
    if arr.dtype.kind not in 'iu':
        raise LatinSquareError("Cayley table entries must be integers; "
                               "received dtype '{}'.".format(arr.dtype))
    arr = arr.astype(np.int64)
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        bad = arr[(arr < 0) | (arr >= n)][0]
        raise LatinSquareError("Entry {} is out of range for a table of order {}."
                               .format(bad, n))
    symbols = np.arange(n)
    bad_rows = np.flatnonzero((np.sort(arr, axis=1) != symbols).any(axis=1))
    if len(bad_rows):
        i = int(bad_rows[0])
        raise LatinSquareError("Row {} contains a duplicate entry: {}."
                               .format(i, arr[i].tolist()), axis='row', index=i)
    bad_cols = np.flatnonzero((np.sort(arr, axis=0) != symbols[:, None]).any(axis=0))
    if len(bad_cols):
        j = int(bad_cols[0])
        raise LatinSquareError("Column {} contains a duplicate entry: {}."
                               .format(j, arr[:, j].tolist()), axis='column', index=j)
    return arr

def validate(table):
    """
    Return the quasigroup with Cayley table `table`.

    Raises
    ------
    LatinSquareError
        If `table` is not square, has an entry outside 0..n-1, or repeats a
        symbol in a row or column. The first offending row (rows are checked
        before columns) is reported.
    """
    return Quasigroup(table)

def cyclic_group(n):
    """Cayley table of (Z_n, +)."""
    if n < 1:
        raise ValueError("Quasigroup order must be at least 1.")
    x = np.arange(n)
    return Quasigroup((x[:, None] + x[None, :]) % n)

def left_division(q):
    """
    The (23)-parastrophe of `q`: ``x \\ z == y`` exactly when
    ``q(x, y) == z``.
    """
    n = q.order
    ld = np.empty_like(q.table)
    ld[np.arange(n)[:, None], q.table] = np.arange(n)[None, :]
    return Quasigroup(ld)

# =====================================
# Isotopies

class Isotopy:
    """
    Triple of permutations `(alpha, beta, gamma)` acting on the rows,
    columns and entries of a Cayley table. Unpacks like a tuple.
    """
    def __init__(self, alpha, beta, gamma):
        alpha, beta, gamma = (Permutation(p) for p in (alpha, beta, gamma))
        if not alpha.degree == beta.degree == gamma.degree:
            raise DegreeMismatch("Isotopy components have different degrees "
                                 "({}, {}, {}).".format(alpha.degree, beta.degree,
                                                        gamma.degree))
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma

    @classmethod
    def identity(cls, degree):
        e = Permutation.identity(degree)
        return cls(e, e, e)

    @property
    def degree(self):
        return self.alpha.degree

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def __eq__(self, other):
        if not isinstance(other, Isotopy):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return "Isotopy(alpha='{}', beta='{}', gamma='{}', degree={})".format(
            self.alpha, self.beta, self.gamma, self.degree)

    def power(self, exponents):
        return isotopy_power(self, exponents)

    def compose(self, other):
        """
        Componentwise composition. Applying `self` then `other` to a table
        equals applying `self.compose(other)` once.
        """
        return Isotopy(*(compose(p, q) for p, q in zip(self, other)))

    def inverse(self):
        return Isotopy(*(inverse(p) for p in self))

    def oneline(self):
        return [p.oneline() for p in self]

def isotopy_power(t, exponents):
    """`T^(m,n,k) = (α^m, β^n, γ^k)`."""
    m, n, k = exponents
    return Isotopy(power(t.alpha, m), power(t.beta, n), power(t.gamma, k))

def _check_isotopy_degree(q, t):
    if t.degree != q.order:
        raise DegreeMismatch("Isotopy of degree {} cannot act on a quasigroup of "
                             "order {}.".format(t.degree, q.order))

def isotopy_stages(q, t):
    """
    The three tables of the isotopy chain.

    Returns
    -------
    rows: ndarray
        Rows permuted, ``rows[x] == table[α(x)]``.
    columns: ndarray
        Columns of `rows` permuted, ``columns[:, y] == rows[:, β(y)]``.
    entries: ndarray
        Every entry of `columns` mapped through γ⁻¹; this is the isotope.
    """
    _check_isotopy_degree(q, t)
    rows = q.table[t.alpha.images, :]
    columns = rows[:, t.beta.images]
    entries = inverse(t.gamma).images[columns]
    return rows, columns, entries

def apply_isotopy(q, t):
    """Isotope `g(x, y) = γ⁻¹(f(α(x), β(y)))` of `q`."""
    _check_isotopy_degree(q, t)
    g = inverse(t.gamma).images[q.table[np.ix_(t.alpha.images, t.beta.images)]]
    return Quasigroup(g)

# =====================================
# Random generation

def random_isotopy(n, rng):
    """
    Three independent uniform permutations of degree `n`.

    Parameters
    ----------
    n: int
    rng: numpy.random.Generator
    """
    if n < 1:
        raise ValueError("Isotopy degree must be at least 1.")
    return Isotopy(*(Permutation(rng.permutation(n)) for _ in range(3)))

def random_quasigroup(n, rng):
    """
    Random quasigroup of order `n`: the cyclic group table composed with a
    uniformly random isotopy.
    Note that this does not sample uniformly from all Latin squares of
    order `n`, only from the isotopy class of Z_n.
    """
    if n < 1:
        raise ValueError("Quasigroup order must be at least 1.")
    return apply_isotopy(cyclic_group(n), random_isotopy(n, rng))
