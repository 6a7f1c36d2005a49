import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasigroup_elgamal.permutations import (
    Permutation, PermutationError, DegreeMismatch, Residue,
    parse_cycles, format_cycles, compose, inverse, power, order, discrete_log)

ALPHA = "(2 3 4)(0 5 1 6)"
GAMMA = "(1 2 3 6 0 5 4)"

@st.composite
def permutations(draw, max_degree=64):
    n = draw(st.integers(min_value=1, max_value=max_degree))
    return Permutation(draw(st.permutations(range(n))))

def parse_cycles_test():
    assert parse_cycles(ALPHA, 7).oneline() == [5, 6, 3, 4, 2, 1, 0]
    assert parse_cycles(GAMMA, 7).oneline() == [5, 2, 3, 6, 1, 4, 0]
    assert parse_cycles("", 7).oneline() == list(range(7))
    assert parse_cycles("()", 3).is_identity()
    # Whitespace between cycles is ignored
    assert parse_cycles(" (2 3 4)  (0 5 1 6) ", 7) == parse_cycles(ALPHA, 7)

@pytest.mark.parametrize('text', ["(0 1", "0 1)", "(0 1)x", "(0 a)", "((0 1))",
                                  "(1_0 2)", "(+1 2)", "(-1 2)", "(0x1 2)"])
def parse_cycles_malformed_test(text):
    with pytest.raises(PermutationError):
        parse_cycles(text, 7)

def parse_cycles_range_test():
    with pytest.raises(PermutationError, match="out of range"):
        parse_cycles("(0 7)", 7)
    with pytest.raises(PermutationError, match="more than once"):
        parse_cycles("(0 1)(1 2)", 7)
    with pytest.raises(PermutationError, match="more than once"):
        parse_cycles("(0 1 0)", 7)

def permutation_validation_test():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])
    with pytest.raises(PermutationError, match="integers"):
        Permutation([0.9, 1.2, 2.7])
    with pytest.raises(PermutationError, match="integers"):
        Permutation([0.0, 1.0, 2.0])
    with pytest.raises(PermutationError):
        Permutation([1, 2, 3])
    with pytest.raises(PermutationError):
        Permutation([])
    with pytest.raises(PermutationError):
        Permutation([1, 0], degree=3)
    p = Permutation([1, 0])
    with pytest.raises(ValueError):
        p.images[0] = 0

def format_cycles_test():
    assert format_cycles(Permutation([5, 6, 3, 4, 2, 1, 0])) == "(0 5 1 6)(2 3 4)"
    assert format_cycles(Permutation.identity(7)) == "()"
    assert format_cycles(Permutation([1, 0])) == "(0 1)"
    assert str(parse_cycles(GAMMA, 7)) == "(0 5 4 1 2 3 6)"

@given(permutations())
def cycle_notation_roundtrip_test(p):
    assert parse_cycles(format_cycles(p), p.degree) == p

def compose_test():
    alpha = parse_cycles(ALPHA, 7)
    gamma = parse_cycles(GAMMA, 7)
    assert format_cycles(compose(alpha, alpha)) == "(0 1)(2 4 3)(5 6)"
    assert compose(alpha, Permutation.identity(7)) == alpha
    assert compose(gamma, inverse(gamma)).is_identity()
    # Right to left: q is applied first
    p, q = Permutation([1, 2, 0]), Permutation([0, 2, 1])
    assert compose(p, q).oneline() == [p(q(x)) for x in range(3)]
    assert (p * q) == compose(p, q)
    with pytest.raises(DegreeMismatch):
        compose(alpha, Permutation.identity(6))

def inverse_test():
    gamma = parse_cycles(GAMMA, 7)
    assert inverse(gamma) == parse_cycles("(1 4 5 0 6 3 2)", 7)
    assert inverse(Permutation.identity(4)).is_identity()
    assert inverse(Permutation([1, 0])).oneline() == [1, 0]

def power_test():
    alpha = parse_cycles(ALPHA, 7)
    gamma = parse_cycles(GAMMA, 7)
    assert power(alpha, 5).oneline() == [5, 6, 4, 2, 3, 1, 0]
    assert format_cycles(power(alpha, 15)) == "(0 6 1 5)"
    assert power(alpha, 0).is_identity()
    assert format_cycles(power(gamma, 30)) == "(0 4 2 6 5 1 3)"
    assert power(gamma, -1) == inverse(gamma)
    assert alpha ** 3 == power(alpha, 3)

def power_huge_exponent_test():
    alpha = parse_cycles(ALPHA, 7)
    e = 2**200 + 3
    # 2**200 ≡ 4 (mod 12)
    assert power(alpha, e) == power(alpha, 7)
    assert power(alpha, np.int64(15)) == power(alpha, 3)
    with pytest.raises(TypeError):
        power(alpha, 1.5)

def order_test():
    assert order(parse_cycles(ALPHA, 7)) == 12
    assert order(Permutation.identity(7)) == 1
    assert order(parse_cycles(GAMMA, 7)) == 7
    assert order(parse_cycles("(0 1)(2 3 4)(5 6 7 8)", 9)) == 12

@given(permutations(), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def power_laws_test(p, a, b):
    assert power(p, a + b) == compose(power(p, a), power(p, b))
    assert power(p, order(p)).is_identity()
    assert power(p, a) == power(p, a % order(p))
    assert power(power(p, a), b) == power(power(p, b), a) == power(p, a*b)

def discrete_log_test():
    alpha = parse_cycles(ALPHA, 7)
    gamma = parse_cycles(GAMMA, 7)
    assert discrete_log(alpha, parse_cycles("(0 6 1 5)", 7)) == Residue(3, 12)
    assert discrete_log(alpha, Permutation.identity(7)) == Residue(0, 12)
    assert discrete_log(gamma, power(gamma, 30)) == Residue(2, 7)
    assert discrete_log(Permutation.identity(7), Permutation.identity(7)) == Residue(0, 1)
    # Not in the cyclic subgroup generated by alpha
    assert discrete_log(alpha, gamma) is None
    assert discrete_log(alpha, parse_cycles("(2 3)", 7)) is None
    # Shifts on the cycles of base are individually valid but incompatible
    p = parse_cycles("(0 1)(2 3 4 5)", 6)
    assert discrete_log(p, parse_cycles("(0 1)(2 4)(3 5)", 6)) is None

def discrete_log_brute_force_test():
    alpha = parse_cycles(ALPHA, 7)
    for e in range(order(alpha)):
        matches = [f for f in range(order(alpha)) if power(alpha, f) == power(alpha, e)]
        assert matches == [e]
        assert discrete_log(alpha, power(alpha, e)) == Residue(e, 12)

@settings(max_examples=200)
@given(permutations(max_degree=40), st.integers(min_value=0, max_value=2**64))
def discrete_log_random_test(p, e):
    assert discrete_log(p, power(p, e)) == Residue(e % order(p), order(p))
