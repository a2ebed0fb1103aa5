"""Small integer number theory: primality, factorization, prime lists."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Deterministic Miller-Rabin witness set for n < 3.3e24, which covers 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; exact for every ``n < 2**64``."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).tolist()


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    if n < 1:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n))


def divisors(n: int) -> list[int]:
    out = [1]
    for q, e in factorint(n).items():
        out = [d * q**i for d in out for i in range(e + 1)]
    return sorted(out)


@lru_cache(maxsize=8)
def totients_upto(n: int) -> np.ndarray:
    """Array ``phi`` with ``phi[i]`` Euler's totient of ``i`` for ``0 <= i <= n``."""
    phi = np.arange(n + 1, dtype=np.int64)
    for q in primes_upto(n):
        phi[q::q] -= phi[q::q] // q
    phi.setflags(write=False)
    return phi
