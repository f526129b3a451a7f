"""Small integer helpers: factorization, totient, prime-power tests."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return the prime factorization of ``n`` as ``((p, e), ...)`` with p ascending.

    ``factorize(1)`` is the empty tuple.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def euler_phi(n: int) -> int:
    phi = n
    for p, _ in factorize(n):
        phi = phi // p * (p - 1)
    return phi


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(k: int, q: int) -> int:
    """Order of ``k`` in the unit group mod ``q`` (0 if ``k`` is not a unit)."""
    from math import gcd

    k %= q
    if gcd(k, q) != 1:
        return 0
    m, x = 1, k
    while x != 1 % q:
        x = x * k % q
        m += 1
    return m
