from .rcparams import rcParams

from .permutations import Permutation, parse_cycles, format_cycles
from .quasigroups import Quasigroup, Isotopy, apply_isotopy
from .scheme import (PublicKey, PrivateKey, EphemeralExponents, Ciphertext,
                     keygen, random_keygen, encrypt, decrypt, recover_exponents)
