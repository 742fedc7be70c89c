"""Integer primality and factorization.

Trial division handles desk-scale inputs; a Pollard rho (Brent cycle
finding) fallback covers larger composites.  Inputs are capped at 64 bits
unless the caller lifts the bound.  Everything is deterministic.
"""

from __future__ import annotations

import math

from .errors import FactorizationLimitError

DEFAULT_LIMIT = 2**64

# Sentinel meaning "use the process-wide limit"; the CLI --allow-big flag
# clears the process-wide limit for arbitrary precision inputs.
USE_ACTIVE = object()
_active_limit: int | None = DEFAULT_LIMIT


def set_factorization_limit(limit: int | None) -> None:
    global _active_limit
    _active_limit = limit


def _resolve_limit(limit) -> int | None:
    return _active_limit if limit is USE_ACTIVE else limit


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of an odd composite n (Brent variant)."""
    if n % 2 == 0:
        return 2
    # Deterministic parameter sweep; some (x0, c) pair always succeeds.
    for c in range(1, 256):
        x = y = 2
        d = 1
        q = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            q = q * abs(x - y) % n
            d = math.gcd(q if q else abs(x - y), n)
        if d != n:
            return d
    raise FactorizationLimitError(f"pollard rho failed on {n}")


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorint(n: int, limit=USE_ACTIVE) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 into sorted (prime, exponent) pairs.

    limit caps the accepted input size; pass None to allow arbitrary
    precision, or leave it to use the process-wide bound.
    """
    if n < 1:
        raise ValueError("factorint expects n >= 1")
    limit = _resolve_limit(limit)
    if limit is not None and n > limit:
        raise FactorizationLimitError(f"{n} exceeds factorization bound {limit}")
    acc: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            acc[p] = acc.get(p, 0) + 1
            n //= p
    # Trial division up to a fixed desk-scale bound, rho for the rest.
    d = 41
    while d * d <= n and d < 100_000:
        while n % d == 0:
            acc[d] = acc.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        _factor_into(n, acc)
    return tuple(sorted(acc.items()))


def prime_factors(n: int, limit=USE_ACTIVE) -> tuple[int, ...]:
    """Sorted distinct prime divisors of |n|, n nonzero."""
    return tuple(p for p, _ in factorint(abs(n), limit))


def radical(n: int, limit=USE_ACTIVE) -> int:
    """Product of the distinct prime divisors of n >= 1."""
    r = 1
    for p, _ in factorint(n, limit):
        r *= p
    return r


def primes_below(bound: int) -> list[int]:
    """All primes < bound by a plain sieve."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(bound) if sieve[i]]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k
