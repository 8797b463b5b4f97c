import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from taqcalc.modp import (
    PrimeField, binom_mod_p, field_from_name, is_prime, multinom_mod_p, nu_sign,
    ord_p_factorial, p_digits,
)


def oracle(a, b, p):
    return 0 if a < 0 or b < 0 else math.comb(a + b, a) % p


@pytest.mark.parametrize("a,b,p,expected", [(1, 0, 2, 1), (3, 4, 2, 1), (1, 1, 2, 0), (-1, 5, 3, 0)])
def test_binom_examples(a, b, p, expected):
    assert binom_mod_p(a, b, p) == expected


@given(st.integers(-5, 2000), st.integers(-5, 2000), st.sampled_from([2, 3, 5, 7, 11]))
def test_binom_matches_big_integers(a, b, p):
    assert binom_mod_p(a, b, p) == oracle(a, b, p)


@given(st.integers(0, 500), st.integers(0, 500), st.sampled_from([2, 3, 5]))
def test_binom_symmetric(a, b, p):
    assert binom_mod_p(a, b, p) == binom_mod_p(b, a, p)


@pytest.mark.parametrize("parts,p,expected", [([2], 3, 1), ([1, 1], 2, 0), ([1, 1], 3, 2), ([1, -1], 5, 0)])
def test_multinomial_examples(parts, p, expected):
    assert multinom_mod_p(parts, p) == expected


@given(st.lists(st.integers(0, 12), min_size=1, max_size=4), st.sampled_from([2, 3, 5, 7]))
def test_multinomial_matches_factorials(parts, p):
    exact = math.factorial(sum(parts))
    for x in parts:
        exact //= math.factorial(x)
    assert multinom_mod_p(parts, p) == exact % p


@pytest.mark.parametrize("n,p,expected", [(9, 3, 4), (1, 2, 0), (8, 2, 7)])
def test_ord_p_examples(n, p, expected):
    assert ord_p_factorial(n, p) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_ord_p_matches_factorial_valuation(p):
    for n in range(0, 200):
        f, v = math.factorial(n), 0
        while f % p == 0:
            f //= p
            v += 1
        assert ord_p_factorial(n, p) == v


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ord_p_of_prime_powers(p):
    for m in range(7):
        assert ord_p_factorial(p ** m, p) == (p ** m - 1) // (p - 1)


@pytest.mark.parametrize("n,p,expected", [(0, 3, 1), (2, 3, 2), (1, 5, 2)])
def test_nu_examples(n, p, expected):
    assert nu_sign(n, p) == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_nu_period_four(p):
    unit = math.factorial((p - 1) // 2)
    for n in range(21):
        assert nu_sign(n + 4, p) == nu_sign(n, p) * unit ** 4 % p
        assert nu_sign(n, p) != 0


def test_nu_rejects_two():
    with pytest.raises(ValueError):
        nu_sign(1, 2)


def test_prime_field():
    F = PrimeField(5)
    assert F(-1) == 4 and F(Fraction(1, 2)) == 3 and F.inv(2) == 3
    assert str(F) == "F5" and field_from_name("F5") == F and field_from_name(5) == F
    with pytest.raises(ValueError):
        PrimeField(6)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert str(field_from_name("Q")) == "Q"


def test_digits():
    assert p_digits(10, 3) == [1, 0, 1]
    assert p_digits(0, 2) == []
