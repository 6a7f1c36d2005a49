"""
Classical ElGamal over the integers modulo a prime.

Used as a reference for the quasigroup scheme: a private exponent `c`, a
public value ``d = g^c mod p``, ciphertexts ``(r, e) = (g^k, m·d^k) mod p``
and decryption ``m = e · r^(p-1-c) mod p``.

`g` is not required to be a primitive root; `is_primitive_root` is provided
to check it.
"""

from collections import namedtuple
import sympy
from sympy.ntheory import is_primitive_root as _is_primitive_root

##################################
# Custom errors
class ClassicParamError(ValueError):
    pass

ClassicKeyPair = namedtuple("ClassicKeyPair", ['c', 'd'])
ClassicCiphertext = namedtuple("ClassicCiphertext", ['r', 'e'])

class ClassicParams:
    """
    Public parameters: a prime modulus `p` and a base `g`, 1 < g < p.
    Primality is checked with `sympy.isprime`.
    """
    def __init__(self, p, g):
        if not sympy.isprime(p):
            raise ClassicParamError("Modulus {} is not prime.".format(p))
        if not 1 < g < p:
            raise ClassicParamError("Base g must satisfy 1 < g < p; received g={}, p={}."
                                    .format(g, p))
        self.p = p
        self.g = g

    def __repr__(self):
        return "ClassicParams(p={}, g={})".format(self.p, self.g)

def modpow(base, exponent, modulus):
    """`base^exponent mod modulus` by square-and-multiply (builtin `pow`)."""
    if modulus < 2:
        raise ClassicParamError("Modulus must be at least 2; received {}.".format(modulus))
    if exponent < 0:
        raise ClassicParamError("Exponent must be non-negative; received {}."
                                .format(exponent))
    return pow(base, exponent, modulus)

def is_primitive_root(g, p):
    """True if `g` generates the multiplicative group modulo `p`."""
    return bool(_is_primitive_root(g, p))

def classic_keygen(params, c):
    """Key pair for the private exponent `c`, 1 < c < p-1."""
    if not 1 < c < params.p - 1:
        raise ClassicParamError("Private exponent must satisfy 1 < c < p-1; received "
                                "c={}, p={}.".format(c, params.p))
    return ClassicKeyPair(c, modpow(params.g, c, params.p))

def classic_encrypt(params, d, m, k):
    """
    Encrypt `m` (0 ≤ m < p) for public value `d` with ephemeral `k`,
    1 ≤ k ≤ p-2.
    """
    p = params.p
    if not 0 <= m < p:
        raise ClassicParamError("Message must satisfy 0 <= m < p; received m={}, p={}."
                                .format(m, p))
    if not 1 <= k <= p - 2:
        raise ClassicParamError("Ephemeral must satisfy 1 <= k <= p-2; received "
                                "k={}, p={}.".format(k, p))
    return ClassicCiphertext(modpow(params.g, k, p), m * modpow(d, k, p) % p)

def classic_decrypt(params, c, ct):
    """Recover `m = e · r^(p-1-c) mod p`."""
    p = params.p
    r, e = ct
    if not (0 <= r < p and 0 <= e < p):
        raise ClassicParamError("Ciphertext components must lie in 0..p-1; received "
                                "({}, {}) with p={}.".format(r, e, p))
    if not 1 < c < p - 1:
        raise ClassicParamError("Private exponent must satisfy 1 < c < p-1; received "
                                "c={}, p={}.".format(c, p))
    return e * modpow(r, p - 1 - c, p) % p
