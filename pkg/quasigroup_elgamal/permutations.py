"""
Exact arithmetic on finite permutations.

A permutation of degree `n` acts on the points {0, …, n-1} and is stored in
one-line form: `images[i]` is the image of point `i`.
Composition is read right to left, i.e. `compose(p, q)(x) == p(q(x))`.

Powers are reduced cycle by cycle, so exponents of any size (including
negative ones) cost O(n).

Cycle notation
--------------
Permutations can be read and written in disjoint-cycle notation, e.g.
``"(2 3 4)(0 5 1 6)"``. The degree is never inferred from the text; it is
always given separately. Formatting is canonical: each cycle starts at its
smallest point, cycles are sorted by that point, fixed points are omitted
and the identity is written ``"()"``.
"""

import re
import math
import operator
import logging
from collections import namedtuple
import numpy as np
from sympy.ntheory.modular import solve_congruence
logger = logging.getLogger('quasigroup_elgamal.permutations')

##################################
# Custom errors
class PermutationError(ValueError):
    pass

class DegreeMismatch(ValueError):
    pass

Residue = namedtuple("Residue", ['value', 'modulus'])
    # Result of `discrete_log`: the exponent is `value` mod `modulus`.

class Permutation:
    """
    Immutable bijection on {0, …, n-1}.

    Parameters
    ----------
    images: sequence of int
        One-line form; `images[i]` is the image of `i`.
    degree: int
        (Optional) If given, checked against `len(images)`.
    """
    def __init__(self, images, degree=None):
        if isinstance(images, Permutation):
            images = images.images
        arr = np.asarray(images)
        if arr.size and arr.dtype.kind not in 'iu':
            raise PermutationError("Permutation images must be integers; "
                                   "received dtype '{}'.".format(arr.dtype))
        arr = np.array(arr, dtype=np.int64)
        if arr.ndim != 1:
            raise PermutationError("Permutation images must be a flat sequence; "
                                   "received an array of shape {}.".format(arr.shape))
        if len(arr) == 0:
            raise PermutationError("Permutation degree must be positive.")
        if degree is not None and len(arr) != degree:
            raise PermutationError("Permutation has {} images, but degree {} was "
                                   "specified.".format(len(arr), degree))
        if not np.array_equal(np.sort(arr), np.arange(len(arr))):
            raise PermutationError("{} is not a bijection on 0..{}."
                                   .format(arr.tolist(), len(arr)-1))
        arr.setflags(write=False)
        self._images = arr

    @classmethod
    def identity(cls, degree):
        return cls(np.arange(degree))

    @property
    def images(self):
        """Read-only one-line array."""
        return self._images

    @property
    def degree(self):
        return len(self._images)

    def __len__(self):
        return len(self._images)

    def __call__(self, x):
        """Image of point `x` (or of an integer array of points)."""
        if np.ndim(x) == 0:
            return int(self._images[x])
        return self._images[np.asarray(x)]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self._images, other._images)

    def __hash__(self):
        return hash(tuple(self._images.tolist()))

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return "Permutation('{}', degree={})".format(format_cycles(self), self.degree)

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, e):
        return power(self, e)

    def inverse(self):
        return inverse(self)

    def oneline(self):
        """Images as a plain list of ints (the key-file representation)."""
        return self._images.tolist()

    def is_identity(self):
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def cycles(self, include_fixed=False):
        """
        Disjoint cycles, each starting at its smallest point, ordered by
        that point.

        Parameters
        ----------
        include_fixed: bool
            If True, fixed points are returned as cycles of length 1.

        Returns
        -------
        list of tuples of int
        """
        images = self._images.tolist()
        seen = [False] * len(images)
        cycles = []
        for start in range(len(images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = images[x]
            if len(cycle) > 1 or include_fixed:
                cycles.append(tuple(cycle))
        return cycles

# =====================================
# Cycle notation

_cycle_re = re.compile(r'\s*\(([^()]*)\)')
_point_re = re.compile(r'[0-9]+')

def parse_cycles(text, degree):
    """
    Parse disjoint-cycle notation.

    Parameters
    ----------
    text: str
        Parenthesized cycles, e.g. ``"(2 3 4)(0 5 1 6)"``. Whitespace between
        cycles is ignored. Empty text, or ``"()"``, denotes the identity.
    degree: int
        Number of points. Points not mentioned are fixed.

    Returns
    -------
    Permutation
    """
    if degree < 1:
        raise PermutationError("Permutation degree must be positive.")
    images = list(range(degree))
    seen = set()
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _cycle_re.match(text, pos)
        if m is None:
            raise PermutationError("Malformed cycle notation at position {} of '{}'."
                                   .format(pos, text))
        tokens = m.group(1).split()
        if not all(_point_re.fullmatch(token) for token in tokens):
            raise PermutationError("Malformed cycle '({})': cycles may only "
                                   "contain integers.".format(m.group(1)))
        points = [int(token) for token in tokens]
        for x in points:
            if not 0 <= x < degree:
                raise PermutationError("Point {} is out of range for degree {}."
                                       .format(x, degree))
            if x in seen:
                raise PermutationError("Point {} appears more than once in '{}'."
                                       .format(x, text))
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
        pos = m.end()
    return Permutation(images)

def format_cycles(p):
    """Canonical cycle notation of `p`; the identity is ``"()"``."""
    cycles = p.cycles()
    if len(cycles) == 0:
        return "()"
    return "".join("(" + " ".join(str(x) for x in cycle) + ")"
                   for cycle in cycles)

# =====================================
# Group operations

def _check_degrees(p, q):
    if p.degree != q.degree:
        raise DegreeMismatch("Permutations have different degrees ({} and {})."
                             .format(p.degree, q.degree))

def compose(p, q):
    """Return `r` with `r(x) == p(q(x))`; `q` is applied first."""
    _check_degrees(p, q)
    return Permutation(p.images[q.images])

def inverse(p):
    inv = np.empty_like(p.images)
    inv[p.images] = np.arange(p.degree)
    return Permutation(inv)

def power(p, e):
    """
    `p` composed with itself `e` times. Negative `e` gives powers of the
    inverse. Each cycle is rotated by `e` modulo its length, so the size of
    `e` is irrelevant.
    """
    e = operator.index(e)   # Keep arbitrary precision; numpy ints are accepted
    images = np.arange(p.degree)
    for cycle in p.cycles():
        c = np.array(cycle)
        images[c] = np.roll(c, -(e % len(c)))
    return Permutation(images)

def order(p):
    """Least `e ≥ 1` with `power(p, e)` the identity (lcm of cycle lengths)."""
    return math.lcm(*(len(c) for c in p.cycles(include_fixed=True)))

def discrete_log(base, target):
    """
    Solve `power(base, e) == target` for `e`.

    On each cycle of `base`, `target` must act as a rotation by some shift
    `s`, which gives the congruence e ≡ s (mod cycle length). The
    congruences are then combined with the Chinese remainder theorem (moduli
    need not be coprime).

    Returns
    -------
    Residue | None
        `(value, modulus)` with `modulus == order(base)` and
        `0 <= value < modulus`, or None if `target` is not a power of `base`.
    """
    _check_degrees(base, target)
    congruences = []
    for cycle in base.cycles(include_fixed=True):
        L = len(cycle)
        position = {x: i for i, x in enumerate(cycle)}
        s = position.get(target(cycle[0]))
        if s is None:
            return None
        if any(target(cycle[i]) != cycle[(i+s) % L] for i in range(L)):
            return None
        if L > 1:
            congruences.append((s, L))
    if len(congruences) == 0:
        return Residue(0, 1)
    solution = solve_congruence(*congruences)
    if solution is None:
        logger.debug("Cycle congruences {} are inconsistent.".format(congruences))
        return None
    value, modulus = (int(v) for v in solution)
    return Residue(value % modulus, modulus)
