from math import gcd

import pytest

from powergraphs.arith import divisors, euler_phi, factorize, is_prime, is_prime_power, multiplicative_order


@pytest.mark.parametrize(
    "n, fac, phi, ppow",
    [(12, ((2, 2), (3, 1)), 4, False), (8, ((2, 3),), 4, True), (20, ((2, 2), (5, 1)), 8, False), (1, (), 1, False)],
)
def test_factorize_examples(n, fac, phi, ppow):
    assert factorize(n) == fac
    assert euler_phi(n) == phi
    assert is_prime_power(n) == ppow


@pytest.mark.parametrize("n", range(1, 301))
def test_phi_matches_gcd_count(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("n", range(1, 301))
def test_factorization_multiplies_back(n):
    prod = 1
    for p, e in factorize(n):
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(6, 7) == 2
    assert multiplicative_order(4, 5) == 2
