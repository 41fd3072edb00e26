"""Exact integer primitives: sieve, primality, factorization, multiplicative orders.

Everything in this module is deterministic. Primality uses fixed Miller-Rabin
witness sets that are exact for all n < 2**64, and factorization runs trial
division by small primes followed by Brent-cycle Pollard rho with a fixed
parameter schedule, so repeated runs give identical results. Python integers
are arbitrary precision, so intermediate products never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Trial division bound used before switching to Pollard rho.
_TRIAL_BOUND = 10_000
_MAX_FACTOR_INPUT = 2**64

# Deterministic Miller-Rabin witness tiers (published exact bounds).
_MR_TIERS = (
    (1_373_653, (2, 3)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order; empty for limit < 2."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(2, limit + 1) if flags[i]]


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2**64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, bases in _MR_TIERS:
        if n < bound:
            witnesses = bases
            break
    else:
        witnesses = _MR_TIERS[-1][1]
    for a in witnesses:
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


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its complete prime factorization.

    factors is an ascending tuple of (prime, exponent) pairs whose product
    reassembles to value; validated on construction.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("value must be positive")
        prod = 1
        prev = 1
        for q, e in self.factors:
            if e < 1 or q <= prev or not is_prime(q):
                raise ValueError(f"invalid factor list for {self.value}")
            prev = q
            prod *= q**e
        if prod != self.value:
            raise ValueError(f"factors do not reassemble to {self.value}")

    def prime_divisors(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(sieve_primes(_TRIAL_BOUND))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of odd composite n, found with a fixed c schedule."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = _gcd(abs(x - y), n)
        if g != n:
            return g
        c += 1


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factor_integer(n: int) -> FactoredInteger:
    """Complete factorization of n, for 1 <= n < 2**64."""
    if not 1 <= n < _MAX_FACTOR_INPUT:
        raise ValueError(f"factor_integer supports 1 <= n < 2**64, got {n}")
    value = n
    found: dict[int, int] = {}
    for q in _small_primes():
        if q * q > n:
            break
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
    if n > 1:
        _factor_into(n, found)
    return FactoredInteger(value, tuple(sorted(found.items())))


def mult_order(a: int, p: int, totient: FactoredInteger | None = None) -> int:
    """Least e >= 1 with a**e == 1 mod p, for prime p and a not divisible by p.

    totient must be the factorization of p - 1; it is computed when omitted.
    """
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    if totient is None:
        totient = factor_integer(p - 1)
    elif totient.value != p - 1:
        raise ValueError("totient must factor p - 1")
    order = p - 1
    for q, _ in totient.factors:
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def euler_phi(n: int) -> int:
    """Euler totient, via factorization."""
    phi = 1
    for q, e in factor_integer(n).factors:
        phi *= (q - 1) * q ** (e - 1)
    return phi


def all_divisors(f: FactoredInteger) -> list[int]:
    """All positive divisors of f.value, ascending."""
    divs = [1]
    for q, e in f.factors:
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)
