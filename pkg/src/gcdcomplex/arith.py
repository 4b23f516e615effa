"""Integer helpers: distinct prime support, gcd of a set."""

from __future__ import annotations

import math
from collections.abc import Iterable

#: Inputs at or above this bound are rejected at ingestion.
MAX_VALUE = 2**63


def check_positive(v: int) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"expected an integer, got {v!r}")
    if v < 1:
        raise ValueError(f"value must be a positive integer, got {v}")
    if v >= MAX_VALUE:
        raise OverflowError(f"value {v} exceeds the supported bound 2**63")
    return v


def factorize(v: int) -> tuple[int, ...]:
    """Distinct primes dividing ``v`` in ascending order.

    Multiplicity is discarded, so ``factorize(20) == (2, 5)``; ``factorize(1)``
    is empty. Trial division by 2, 3 and then 6k +/- 1 up to the square root.
    """
    check_positive(v)
    primes = []
    for p in (2, 3):
        if v % p == 0:
            primes.append(p)
            while v % p == 0:
                v //= p
    d = 5
    while d * d <= v:
        for p in (d, d + 2):
            if v % p == 0:
                primes.append(p)
                while v % p == 0:
                    v //= p
        d += 6
    if v > 1:
        primes.append(v)
    return tuple(primes)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == (n,)


def gcd_set(values: Iterable[int]) -> int:
    """gcd of a nonempty collection; the gcd of a singleton is its element."""
    values = list(values)
    if not values:
        raise ValueError("empty set has no gcd")
    for v in values:
        check_positive(v)
    return math.gcd(*values)


def pi_of_set(values: Iterable[int]) -> tuple[int, ...]:
    """Prime support of the gcd of ``values``."""
    return factorize(gcd_set(values))


def smallest_prime_factor(v: int) -> int:
    primes = factorize(v)
    if not primes:
        raise ValueError("1 has no prime factor")
    return primes[0]


def prime_power_base(v: int) -> int | None:
    """Return p if ``v`` is a positive power of the prime p, else None."""
    primes = factorize(v)
    return primes[0] if len(primes) == 1 else None
