"""
Published worked examples, with every printed intermediate value.

Example 1 and 2 use classical ElGamal; example 3 walks through the
quasigroup scheme over an order-7 quasigroup, from the base table to the
left-division table used for decryption.

`run_example` recomputes an example, echoes every intermediate value and
records the first value that differs from the published one.

A note on the published exponent labels: the powers applied to the
quasigroup during encryption are written as α^(5m), β^(3n) and γ^(6k), which
are α^15, β^18 and γ^30. The printed permutations equal these reduced
modulo the component orders (α^15 = α^3, β^18 = β^6 = β^2, γ^30 = γ^2).
"""

import logging
import numpy as np
import pandas as pd
from . import classic
from . import markovski
from . import scheme
from .permutations import parse_cycles, format_cycles, power, inverse
from .quasigroups import Quasigroup, Isotopy, isotopy_power, isotopy_stages, left_division
logger = logging.getLogger('quasigroup_elgamal.worked_examples')

# =====================================
# Example 1 and 2: classical ElGamal

EXAMPLE_1 = dict(p=23, g=5, c=13, k=7, m=15, d=21, ciphertext=(17, 12))
EXAMPLE_2 = dict(p=107, g=2, c=67, k=45, m=66, d=94, ciphertext=(28, 9))

# =====================================
# Example 3: quasigroup scheme, order 7

ORDER = 7

BASE_TABLE = [[5, 2, 6, 4, 0, 3, 1],
           [1, 6, 5, 3, 4, 2, 0],
           [0, 5, 4, 6, 3, 1, 2],
           [4, 1, 3, 0, 2, 6, 5],
           [2, 4, 0, 1, 6, 5, 3],
           [6, 3, 1, 2, 5, 0, 4],
           [3, 0, 2, 5, 1, 4, 6]]

ALPHA = "(2 3 4)(0 5 1 6)"
BETA = "(0 3 2 1)(5 6)"
GAMMA = "(1 2 3 6 0 5 4)"
GAMMA_INV = "(1 4 5 0 6 3 2)"

# T = (α, β, γ) applied to the base table: rows, then columns, then entries
BASE_ROWS = [[6, 3, 1, 2, 5, 0, 4],
           [3, 0, 2, 5, 1, 4, 6],
           [4, 1, 3, 0, 2, 6, 5],
           [2, 4, 0, 1, 6, 5, 3],
           [0, 5, 4, 6, 3, 1, 2],
           [1, 6, 5, 3, 4, 2, 0],
           [5, 2, 6, 4, 0, 3, 1]]
BASE_COLUMNS = [[2, 6, 3, 1, 5, 4, 0],
           [5, 3, 0, 2, 1, 6, 4],
           [0, 4, 1, 3, 2, 5, 6],
           [1, 2, 4, 0, 6, 3, 5],
           [6, 0, 5, 4, 3, 2, 1],
           [3, 1, 6, 5, 4, 0, 2],
           [4, 5, 2, 6, 0, 1, 3]]
BASE_ISOTOPE = [[1, 3, 2, 4, 0, 5, 6],
           [0, 2, 6, 1, 4, 3, 5],
           [6, 5, 4, 2, 1, 0, 3],
           [4, 1, 5, 6, 3, 2, 0],
           [3, 6, 0, 5, 2, 1, 4],
           [2, 4, 3, 0, 5, 6, 1],
           [5, 0, 1, 3, 6, 4, 2]]

PRIVATE_KEY = (3, 6, 5)
# T^(3,6,5)
ALPHA_3 = "(0 6 1 5)"
BETA_6 = "(0 2)(1 3)"
GAMMA_5 = "(0 3 1 5 6 2 4)"
GAMMA_MINUS_5 = "(0 4 2 6 5 1 3)"
POWERED_ONELINE = ([6, 5, 2, 3, 4, 0, 1],
                   [2, 3, 0, 1, 4, 5, 6],
                   [3, 5, 4, 1, 0, 6, 2])

# T^(3,6,5) applied to the base table
KEY_ROWS = [[3, 0, 2, 5, 1, 4, 6],
           [6, 3, 1, 2, 5, 0, 4],
           [0, 5, 4, 6, 3, 1, 2],
           [4, 1, 3, 0, 2, 6, 5],
           [2, 4, 0, 1, 6, 5, 3],
           [5, 2, 6, 4, 0, 3, 1],
           [1, 6, 5, 3, 4, 2, 0]]
KEY_COLUMNS = [[2, 5, 3, 0, 1, 4, 6],
           [1, 2, 6, 3, 5, 0, 4],
           [4, 6, 0, 5, 3, 1, 2],
           [3, 0, 4, 1, 2, 6, 5],
           [0, 1, 2, 4, 6, 5, 3],
           [6, 4, 5, 2, 0, 3, 1],
           [5, 3, 1, 6, 4, 2, 0]]
KEY_ISOTOPE = [[6, 1, 0, 4, 3, 2, 5],
           [3, 6, 5, 0, 1, 4, 2],
           [2, 5, 4, 1, 0, 3, 6],
           [0, 4, 2, 3, 6, 5, 1],
           [4, 3, 6, 2, 5, 1, 0],
           [5, 2, 1, 6, 4, 0, 3],
           [1, 0, 3, 5, 2, 6, 4]]

EPHEMERAL = (5, 3, 6)
# T^(5,3,6)
EPHEMERAL_ONELINE = ([5, 6, 4, 2, 3, 1, 0],
                     [1, 2, 3, 0, 4, 6, 5],
                     [6, 4, 1, 2, 5, 0, 3])
ALPHA_5 = "(0 5 1 6)(2 4 3)"
BETA_3 = "(0 1 2 3)(5 6)"
GAMMA_6 = "(0 6 3 2 1 4 5)"

# T^(15,18,30), the shared isotopy
SHARED_EXPONENTS = (15, 18, 30)
SHARED_ONELINE = ([6, 5, 2, 3, 4, 0, 1],
                  [2, 3, 0, 1, 4, 5, 6],
                  [4, 3, 6, 0, 2, 1, 5])
ALPHA_15 = "(0 6 1 5)"
BETA_18 = "(0 2)(1 3)"
GAMMA_30 = "(0 4 2 6 5 1 3)"
GAMMA_MINUS_30 = "(0 3 1 5 6 2 4)"

SHARED_ROWS = KEY_ROWS
SHARED_COLUMNS = KEY_COLUMNS
SHARED_ISOTOPE = [[4, 6, 1, 3, 5, 0, 2],
            [5, 4, 2, 1, 6, 3, 0],
            [0, 2, 3, 6, 1, 5, 4],
            [1, 3, 0, 5, 4, 2, 6],
            [3, 5, 4, 0, 2, 6, 1],
            [2, 0, 6, 4, 3, 1, 5],
            [6, 1, 5, 2, 0, 4, 3]]
# Left division of the shared isotope
SHARED_LEFT_DIVISION = [[5, 2, 6, 3, 0, 4, 1],
            [6, 3, 2, 5, 1, 0, 4],
            [0, 4, 1, 2, 6, 5, 3],
            [2, 0, 5, 1, 4, 3, 6],
            [3, 6, 4, 0, 2, 1, 5],
            [1, 5, 0, 4, 3, 6, 2],
            [4, 1, 3, 6, 5, 2, 0]]

LEADER = 3
PLAINTEXT = [6, 3, 0, 5, 1, 2, 4, 0, 3]
CIPHERTEXT = [6, 2, 0, 0, 6, 5, 3, 1, 1]

def base_isotopy():
    return Isotopy(*(parse_cycles(c, ORDER) for c in (ALPHA, BETA, GAMMA)))

def example_keys():
    """Key pair of example 3."""
    return scheme.keygen(Quasigroup(BASE_TABLE), base_isotopy(),
                         scheme.PrivateKey(*PRIVATE_KEY), LEADER)

# =====================================
# Runner

class ExampleRun:
    """
    Records checks for one example. Every value is echoed; the first
    mismatch is kept in `mismatch` as `(label, actual, expected)`.
    """
    def __init__(self, echo):
        self.echo = echo
        self.mismatch = None

    @property
    def ok(self):
        return self.mismatch is None

    def check(self, label, actual, expected):
        if isinstance(actual, np.ndarray) or isinstance(expected, np.ndarray):
            match = np.array_equal(actual, expected)
        else:
            match = (actual == expected)
        self.echo("{} = {}".format(label, _fmt(actual)))
        if not match and self.mismatch is None:
            self.mismatch = (label, actual, expected)
            self.echo("MISMATCH: {} is {}, but {} was expected."
                      .format(label, _fmt(actual), _fmt(expected)))
        return match

    def check_table(self, label, actual, expected):
        self.echo("{}:\n{}".format(label, table_frame(actual).to_string()))
        match = np.array_equal(actual, expected)
        if not match and self.mismatch is None:
            self.mismatch = (label, actual, expected)
            self.echo("MISMATCH: {} differs from the expected table:\n{}"
                      .format(label, table_frame(expected).to_string()))
        return match

def _fmt(value):
    if isinstance(value, np.ndarray):
        return "".join(str(v) for v in value.tolist())
    return str(value)

def table_frame(table):
    """Cayley table as a DataFrame indexed by row and column symbols."""
    table = np.asarray(table)
    n = table.shape[0]
    return pd.DataFrame(table, index=pd.Index(range(n), name='x'),
                        columns=pd.Index(range(n), name='y'))

def _run_classic(run, ex):
    params = classic.ClassicParams(ex['p'], ex['g'])
    keys = classic.classic_keygen(params, ex['c'])
    run.check("d = g^c mod p", keys.d, ex['d'])
    ct = classic.classic_encrypt(params, keys.d, ex['m'], ex['k'])
    run.check("(r, e)", tuple(ct), ex['ciphertext'])
    m = classic.classic_decrypt(params, ex['c'], ct)
    run.check("m'", m, ex['m'])

def _run_quasigroup(run):
    q = Quasigroup(BASE_TABLE)
    t = base_isotopy()
    run.check_table("f", q.table, BASE_TABLE)
    run.check("gamma^-1", format_cycles(inverse(t.gamma)),
              format_cycles(parse_cycles(GAMMA_INV, ORDER)))
    for label, table, expected in zip(("alpha", "beta", "gamma^-1"),
                                      isotopy_stages(q, t),
                                      (BASE_ROWS, BASE_COLUMNS, BASE_ISOTOPE)):
        run.check_table("T(Q) after " + label, table, expected)

    pub, priv = example_keys()
    powered = pub.powered_isotopy
    run.check("alpha^m", format_cycles(powered.alpha), ALPHA_3)
    run.check("beta^n", format_cycles(powered.beta), BETA_6)
    run.check("gamma^k", format_cycles(powered.gamma), GAMMA_5)
    run.check("gamma^-k", format_cycles(inverse(powered.gamma)), GAMMA_MINUS_5)
    for label, table, expected in zip(("alpha^m", "beta^n", "(gamma^k)^-1"),
                                      isotopy_stages(q, powered),
                                      (KEY_ROWS, KEY_COLUMNS, KEY_ISOTOPE)):
        run.check_table("T^(m,n,k)(Q) after " + label, table, expected)

    # Sender
    eph = isotopy_power(t, EPHEMERAL)
    for label, p, expected, cycles in zip(("alpha^r", "beta^s", "gamma^t"), eph,
                                          EPHEMERAL_ONELINE, (ALPHA_5, BETA_3, GAMMA_6)):
        run.check(label, p.oneline(), list(expected))
        run.check(label + " (cycles)", format_cycles(p), cycles)
    sender_shared = isotopy_power(powered, EPHEMERAL)
    for label, p, expected in zip(("alpha^mr", "beta^ns", "gamma^kt"),
                                  sender_shared, SHARED_ONELINE):
        run.check(label, p.oneline(), list(expected))
    shared_full = isotopy_power(t, SHARED_EXPONENTS)
    run.check("alpha^15", format_cycles(shared_full.alpha), ALPHA_15)
    run.check("beta^18", format_cycles(shared_full.beta), BETA_18)
    run.check("gamma^30", format_cycles(shared_full.gamma), GAMMA_30)
    run.check("gamma^-30", format_cycles(power(t.gamma, -30)), GAMMA_MINUS_30)
    for label, table, expected in zip(("alpha^mr", "beta^ns", "(gamma^kt)^-1"),
                                      isotopy_stages(q, sender_shared),
                                      (SHARED_ROWS, SHARED_COLUMNS, SHARED_ISOTOPE)):
        run.check_table("T^(mr,ns,kt)(Q) after " + label, table, expected)

    shared_q = scheme.derive_shared_quasigroup(q, powered, EPHEMERAL)
    v = markovski.encrypt(shared_q, LEADER, PLAINTEXT)
    prev = LEADER
    for i, (u, vi) in enumerate(zip(PLAINTEXT, v.tolist()), start=1):
        run.echo("v{} = {}·{} = {}".format(i, prev, u, vi))
        prev = vi
    ct = scheme.encrypt(pub, PLAINTEXT, EPHEMERAL)
    run.check("b'", ct.body, np.array(CIPHERTEXT))

    # Receiver
    receiver_shared = isotopy_power(ct.ephemeral_isotopy, priv)
    run.check("T^(mr,ns,kt) (receiver)", receiver_shared, sender_shared)
    receiver_q = scheme.derive_shared_quasigroup(q, ct.ephemeral_isotopy, priv)
    run.check_table("Receiver's T^(mr,ns,kt)(Q)", receiver_q.table, SHARED_ISOTOPE)
    run.check_table("Left division", left_division(receiver_q).table, SHARED_LEFT_DIVISION)
    u = scheme.decrypt(pub, priv, ct)
    prev = LEADER
    for i, (vi, ui) in enumerate(zip(ct.body.tolist(), u.tolist()), start=1):
        run.echo("u{} = {}\\{} = {}".format(i, prev, vi, ui))
        prev = vi
    run.check("b", u, np.array(PLAINTEXT))

def run_example(example_id, echo=print):
    """
    Recompute example 1, 2 or 3 and compare with the published values.

    Parameters
    ----------
    example_id: int
    echo: callable
        Receives every output line.

    Returns
    -------
    ExampleRun
    """
    run = ExampleRun(echo)
    if example_id == 1:
        _run_classic(run, EXAMPLE_1)
    elif example_id == 2:
        _run_classic(run, EXAMPLE_2)
    elif example_id == 3:
        _run_quasigroup(run)
    else:
        raise ValueError("Unknown example {}; choose 1, 2 or 3.".format(example_id))
    return run
