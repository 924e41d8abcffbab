from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superprolong.gfp import Fp, binom_lucas, binom_mod, check_modulus, inverse, is_prime

PRIMES = st.sampled_from([3, 5, 7, 11, 13, 1000003])


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("bad", [0, 1, 2, 4, 9, -3])
def test_check_modulus_rejects(bad):
    with pytest.raises(ValueError):
        check_modulus(bad)


@given(PRIMES, st.integers(), st.integers())
def test_field_axioms(p, a, b):
    x, y = Fp(a, p), Fp(b, p)
    assert x + y == Fp(a + b, p)
    assert x * y == Fp(a * b, p)
    assert x - y == -(y - x)
    if y:
        assert (x / y) * y == x


@given(PRIMES, st.integers(min_value=1, max_value=10**6))
def test_inverse(p, a):
    if a % p == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(a, p)
    else:
        assert a * inverse(a, p) % p == 1


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Fp(1, 3) + Fp(1, 5)


def test_immutable():
    with pytest.raises(AttributeError):
        Fp(1, 3).value = 2


@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 300), st.integers(-3, 300))
def test_lucas_matches_exact_binomial(p, a, b):
    expected = comb(a, b) % p if 0 <= b <= a else 0
    assert binom_lucas(a, b, p) == expected


def test_binom_mod_multi_index():
    assert binom_mod((4, 2), (1, 1), 3) == (comb(4, 1) * comb(2, 1)) % 3
    with pytest.raises(ValueError):
        binom_mod((1, 2), (1,), 3)


def test_frobenius_binomials_vanish():
    # C(p^k, j) = 0 mod p for 0 < j < p^k
    for p in (3, 5):
        for j in range(1, p * p):
            assert binom_lucas(p * p, j, p) == 0
