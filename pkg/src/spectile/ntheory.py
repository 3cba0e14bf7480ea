"""Small exact number-theory helpers (trial division is plenty at these sizes)."""

from __future__ import annotations

import functools


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if n < 1:
        raise ValueError(f"divisors of non-positive {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def prime_factorization(n: int) -> tuple[tuple[int, int], ...]:
    """((p, multiplicity), ...) with primes ascending.

    >>> prime_factorization(360)
    ((2, 3), (3, 2), (5, 1))
    """
    if n < 1:
        raise ValueError(f"factorization of non-positive {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    """Euler's totient.

    >>> [euler_phi(s) for s in (1, 2, 9, 16, 30)]
    [1, 1, 6, 8, 8]
    """
    out = 1
    for p, e in prime_factorization(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def prime_power_root(n: int) -> int | None:
    """The prime p when n = p^alpha with alpha >= 1, else None.

    >>> prime_power_root(16), prime_power_root(12), prime_power_root(1)
    (2, None, None)
    """
    fact = prime_factorization(n)
    if len(fact) == 1:
        return fact[0][0]
    return None


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]
