"""
ElGamal-style public-key encryption over quasigroup isotopies.

Key material
------------
- Public key: a quasigroup (Q, f), an isotopy T = (α, β, γ), its power
  T^(m,n,k) = (α^m, β^n, γ^k) and the Markovski leader ℓ.
- Private key: the exponents (m, n, k).

Encryption picks ephemeral exponents (r, s, t), sends T^(r,s,t) together
with the Markovski transformation of the message over the isotope
T^(mr,ns,kt)(Q, f). The receiver rebuilds the same isotope from T^(r,s,t)
and (m, n, k), since componentwise powers commute.

.. Warning:: Powers of a permutation form a cyclic group in which discrete
   logarithms are easy (see `recover_exponents`). This module is a
   reference implementation, not a secure cipher.
"""

import operator
import logging
import numpy as np
from .rcparams import rcParams
from .permutations import DegreeMismatch, discrete_log, power, order
from .quasigroups import (Quasigroup, Isotopy, isotopy_power, apply_isotopy,
                          random_quasigroup, random_isotopy)
from . import markovski
from . import iotools
logger = logging.getLogger('quasigroup_elgamal.scheme')

##################################
# Custom errors
class ExponentError(ValueError):
    pass

class InconsistentKey(ValueError):
    pass

##################################
# Key material

class _ExponentTriple:
    _names = ()
    def __init__(self, *exponents):
        if len(exponents) != 3:
            raise ExponentError("{} takes exactly three exponents ({}); received {}."
                                .format(type(self).__name__, ', '.join(self._names),
                                        len(exponents)))
        values = tuple(operator.index(e) for e in exponents)
        for name, v in zip(self._names, values):
            if v < 1:
                raise ExponentError("Exponent {} must be at least 1; received {}."
                                    .format(name, v))
        self._values = values

    def __iter__(self):
        return iter(self._values)

    def __getattr__(self, attr):
        names = type(self)._names
        if attr in names:
            return self._values[names.index(attr)]
        raise AttributeError(attr)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return "{}({})".format(type(self).__name__,
            ", ".join("{}={}".format(nm, v) for nm, v in zip(self._names, self._values)))

class PrivateKey(_ExponentTriple):
    """Private exponents (m, n, k), each ≥ 1."""
    _names = ('m', 'n', 'k')

    @property
    def repr_json(self):
        return {name: v for name, v in zip(self._names, self._values)}

    @classmethod
    def from_repr_json(cls, data):
        return cls(*(data[name] for name in cls._names))

class EphemeralExponents(_ExponentTriple):
    """Per-message exponents (r, s, t), each ≥ 1."""
    _names = ('r', 's', 't')

class PublicKey:
    """
    Parameters
    ----------
    quasigroup: Quasigroup
    base_isotopy: Isotopy
        T = (α, β, γ)
    powered_isotopy: Isotopy
        T^(m,n,k)
    leader: int
    """
    def __init__(self, quasigroup, base_isotopy, powered_isotopy, leader):
        quasigroup = Quasigroup(quasigroup)
        for name, t in (('base', base_isotopy), ('powered', powered_isotopy)):
            if t.degree != quasigroup.order:
                raise DegreeMismatch("The {} isotopy has degree {}, but the quasigroup "
                                     "has order {}.".format(name, t.degree,
                                                            quasigroup.order))
        self.quasigroup = quasigroup
        self.base_isotopy = base_isotopy
        self.powered_isotopy = powered_isotopy
        self.leader = markovski.validate_leader(leader, quasigroup.order)

    @property
    def order(self):
        return self.quasigroup.order

    def __eq__(self, other):
        if not isinstance(other, PublicKey):
            return NotImplemented
        return (self.quasigroup == other.quasigroup
                and self.base_isotopy == other.base_isotopy
                and self.powered_isotopy == other.powered_isotopy
                and self.leader == other.leader)

    def __repr__(self):
        return ("PublicKey(order={}, base_isotopy={!r}, powered_isotopy={!r}, leader={})"
                .format(self.order, self.base_isotopy, self.powered_isotopy, self.leader))

    @property
    def repr_json(self):
        return {'order': self.order,
                'quasigroup': self.quasigroup.table.tolist(),
                'isotopy': self.base_isotopy.oneline(),
                'isotopy_pow': self.powered_isotopy.oneline(),
                'leader': self.leader}

    @classmethod
    def from_repr_json(cls, data):
        q = Quasigroup(data['quasigroup'])
        if data['order'] != q.order:
            raise DegreeMismatch("Declared order {} differs from the table order {}."
                                 .format(data['order'], q.order))
        return cls(q, Isotopy(*data['isotopy']), Isotopy(*data['isotopy_pow']),
                   data['leader'])

class Ciphertext:
    """
    Parameters
    ----------
    ephemeral_isotopy: Isotopy
        T^(r,s,t)
    body: sequence of int
        Markovski-encrypted symbols, each below the isotopy degree.
    """
    def __init__(self, ephemeral_isotopy, body):
        self.ephemeral_isotopy = ephemeral_isotopy
        self.body = markovski.validate_symbols(body, ephemeral_isotopy.degree)

    @property
    def order(self):
        return self.ephemeral_isotopy.degree

    def __eq__(self, other):
        if not isinstance(other, Ciphertext):
            return NotImplemented
        return (self.ephemeral_isotopy == other.ephemeral_isotopy
                and np.array_equal(self.body, other.body))

    def __repr__(self):
        return "Ciphertext(ephemeral_isotopy={!r}, body={})".format(
            self.ephemeral_isotopy, self.body.tolist())

    @property
    def repr_json(self):
        return {'ephemeral': self.ephemeral_isotopy.oneline(),
                'body': self.body.tolist()}

    @classmethod
    def from_repr_json(cls, data):
        return cls(Isotopy(*data['ephemeral']), data['body'])

# =====================================
# Key generation

def sample_exponents(rng, cls=EphemeralExponents):
    """
    Three exponents drawn uniformly from [1, rcParams['scheme.exponent_max']].

    Parameters
    ----------
    rng: numpy.random.Generator
    cls: PrivateKey | EphemeralExponents
    """
    draws = rng.integers(1, rcParams['scheme.exponent_max'], size=3, endpoint=True)
    return cls(*(int(e) for e in draws))

def keygen(q, t, priv, leader):
    """
    Build the key pair for quasigroup `q`, isotopy `t`, private exponents
    `priv` and leader `leader`.

    Returns
    -------
    (PublicKey, PrivateKey)
    """
    if not isinstance(priv, PrivateKey):
        priv = PrivateKey(*priv)
    if t.degree != q.order:
        raise DegreeMismatch("Isotopy of degree {} does not match quasigroup order {}."
                             .format(t.degree, q.order))
    logger.debug("Generating key of order {}; component orders: {}."
                 .format(q.order, [order(p) for p in t]))
    pub = PublicKey(q, t, isotopy_power(t, priv), leader)
    return pub, priv

def random_keygen(n, rng):
    """Key pair with every component drawn from `rng`."""
    q = random_quasigroup(n, rng)
    t = random_isotopy(n, rng)
    priv = sample_exponents(rng, PrivateKey)
    leader = int(rng.integers(n))
    return keygen(q, t, priv, leader)

# =====================================
# Encryption / decryption

def derive_shared_quasigroup(q, known_power, exponents):
    """
    Isotope of `q` under `known_power` raised to `exponents`.
    The sender calls it with T^(m,n,k) and (r,s,t), the receiver with
    T^(r,s,t) and (m,n,k); both obtain T^(mr,ns,kt)(Q, f).
    """
    return apply_isotopy(q, isotopy_power(known_power, exponents))

def is_degenerate(t, exponents):
    """
    True if some non-identity component of `t` is sent to the identity by
    its exponent. The ciphertext would then reveal that component of the
    shared isotopy.
    """
    return any(power(p, e).is_identity() and not p.is_identity()
               for p, e in zip(t, exponents))

def encrypt(pub, plain, eph, progress=False):
    """
    Encrypt the symbol string `plain` for the holder of `pub`.

    Parameters
    ----------
    pub: PublicKey
    plain: sequence of int
        Symbols in 0..n-1.
    eph: EphemeralExponents | tuple of int | numpy.random.Generator
        Explicit ephemeral exponents, or a generator to sample them from.
        Sampled triples are redrawn while degenerate; explicit degenerate
        triples are used as given, with a warning.
    progress: bool
        Show a progress bar during the Markovski pass.

    Returns
    -------
    Ciphertext
    """
    if isinstance(eph, np.random.Generator):
        rng = eph
        for _ in range(rcParams['scheme.max_resample']):
            eph = sample_exponents(rng)
            if not is_degenerate(pub.base_isotopy, eph):
                break
            logger.debug("Redrawing degenerate ephemeral exponents {}.".format(eph))
        else:
            raise RuntimeError("Unable to draw non-degenerate ephemeral exponents "
                               "after {} attempts.".format(rcParams['scheme.max_resample']))
    else:
        if not isinstance(eph, EphemeralExponents):
            eph = EphemeralExponents(*eph)
        if is_degenerate(pub.base_isotopy, eph):
            logger.warning("Ephemeral exponents {} send a component of the isotopy "
                           "to the identity; the ciphertext leaks that component of "
                           "the shared isotopy.".format(eph))
    ephemeral_isotopy = isotopy_power(pub.base_isotopy, eph)
    shared = derive_shared_quasigroup(pub.quasigroup, pub.powered_isotopy, eph)
    body = markovski.encrypt(shared, pub.leader, plain, progress=progress)
    return Ciphertext(ephemeral_isotopy, body)

def decrypt(pub, priv, ct, progress=False):
    """Recover the plaintext symbols of `ct` with the private exponents."""
    if ct.order != pub.order:
        raise DegreeMismatch("Ciphertext isotopy has degree {}, but the key has "
                             "order {}.".format(ct.order, pub.order))
    shared = derive_shared_quasigroup(pub.quasigroup, ct.ephemeral_isotopy, priv)
    return markovski.decrypt(shared, pub.leader, ct.body, progress=progress)

# =====================================
# Exponent recovery

def recover_exponents(pub):
    """
    Recover (m, n, k) modulo the orders of α, β, γ from the public key
    alone, by discrete logarithms in the cyclic groups ⟨α⟩, ⟨β⟩, ⟨γ⟩.

    Returns
    -------
    tuple of three `permutations.Residue`

    Raises
    ------
    InconsistentKey
        If a powered component is not a power of its base component.
    """
    residues = []
    for name, base, target in zip(('alpha', 'beta', 'gamma'),
                                  pub.base_isotopy, pub.powered_isotopy):
        res = discrete_log(base, target)
        if res is None:
            raise InconsistentKey("The powered {} component is not a power of the "
                                  "base component.".format(name))
        residues.append(res)
    logger.info("Recovered exponent residues: {}.".format(residues))
    return tuple(residues)

def regenerates(pub, residues):
    """True if raising the base isotopy to `residues` gives the powered isotopy."""
    return isotopy_power(pub.base_isotopy,
                         [r.value for r in residues]) == pub.powered_isotopy

iotools.register_datatype(PublicKey)
iotools.register_datatype(PrivateKey)
iotools.register_datatype(Ciphertext)
