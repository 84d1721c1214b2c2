"""Deterministic primality testing and trial-division factoring."""

from __future__ import annotations

import logging

from .constants import PRIME_SEARCH
from .core import FactorizationError, InvalidInputError

logger = logging.getLogger(__name__)

_WITNESSES: tuple[int, ...] = PRIME_SEARCH["miller_rabin_witnesses"]
_LIMIT = 1 << 64


def _decompose_pow2(n: int) -> tuple[int, int]:
    """Write n = 2**r * d with d odd."""
    r = (n & -n).bit_length() - 1
    return r, n >> r


def _miller_rabin_round(n: int, a: int, r: int, d: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for every n below 2**64."""
    if n >= _LIMIT:
        raise InvalidInputError(f"{n} is too large for deterministic testing")
    if n < 2:
        return False
    if n <= _WITNESSES[-1]:
        return n in _WITNESSES
    if n & 1 == 0:
        return False
    r, d = _decompose_pow2(n - 1)
    return all(_miller_rabin_round(n, a, r, d) for a in _WITNESSES)


def is_odd_prime(n: int) -> bool:
    return n > 2 and is_prime(n)


def factor_small(
    n: int, limit: int = PRIME_SEARCH["trial_division_limit"]
) -> dict[int, int]:
    """Factor |n| by trial division with primes below ``limit``.

    Raises:
        InvalidInputError: n is zero.
        FactorizationError: a cofactor with no prime factor below the limit
            remains and is not itself a prime.
    """
    if n == 0:
        raise InvalidInputError("cannot factor 0")
    m = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m and d < limit:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        # Anything left is prime once every divisor below its square root is ruled out
        if d * d > m or is_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            raise FactorizationError(n, m, limit)
    return factors
