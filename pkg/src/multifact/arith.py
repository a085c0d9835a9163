"""Exact arithmetic base layer: prime factorization, divisor machinery and the
scalar types shared by every counting routine.

Counting values are plain Python ints, arbitrary precision from the start
(Bell-number growth overflows 64 bits near n = 25).  Partition-sum weights are
``fractions.Fraction``, which keeps gcd(numerator, denominator) == 1 and a
positive denominator by construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, isqrt

BigCount = int
ExactRational = Fraction

__all__ = [
    "BigCount",
    "ExactRational",
    "FactoredInt",
    "IntegrityError",
    "binomial",
    "divisor_power_pairs",
    "divisor_power_reductions",
    "factorize",
    "kappa",
    "prime_power",
    "prime_signature",
    "primorial",
    "smallest_prime_factor",
]


class IntegrityError(RuntimeError):
    """A sum or division that must be exact in integers was not.

    Firing signals an implementation bug, never bad user input, so this is a
    mandatory runtime check rather than a debug-only assert.
    """


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with primes strictly
    increasing and every exponent >= 1; the unit 1 has an empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"value must be >= 1, got {self.value}")
        prod_check = 1
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError(f"factors must be strictly increasing: {self.factors}")
            if e < 1:
                raise ValueError(f"exponents must be >= 1: {self.factors}")
            last = p
            prod_check *= p**e
        if prod_check != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)


# --------------------------------------------------------------------------
# shared prime sieve

_primes: list[int] = []
_sieve_limit = 0


def _ensure_sieve(limit: int) -> None:
    """Extend the cached prime list to cover [2, limit].

    The list is rebuilt and swapped atomically, never mutated in place, so
    concurrent readers always see a consistent snapshot.
    """
    global _primes, _sieve_limit
    if limit <= _sieve_limit:
        return
    limit = max(limit, 2 * _sieve_limit, 1 << 10)
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    _primes = [i for i, flag in enumerate(sieve) if flag]
    _sieve_limit = limit


def factorize(n: int) -> FactoredInt:
    """Canonical prime factorization by trial division; deterministic.

    Intended for desk-scale inputs (up to roughly 10**12).
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    _ensure_sieve(isqrt(n) + 1)
    rest = n
    factors = []
    for p in _primes:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    if rest > 1:
        factors.append((rest, 1))
    return FactoredInt(n, tuple(factors))


def prime_power(p: int, e: int) -> FactoredInt:
    """Build p**e as a FactoredInt without factorizing the (possibly huge) value."""
    if e == 0:
        return FactoredInt(1, ())
    return FactoredInt(p**e, ((p, e),))


def prime_signature(fi: FactoredInt) -> tuple[int, ...]:
    """Exponent multiset, sorted nonincreasing.

    Every counting function in this package depends on n only through this
    signature, which is why it serves as the memoization key everywhere.
    """
    return tuple(sorted(fi.exponents, reverse=True))


def primorial(n: int) -> FactoredInt:
    """Product of the first n primes, each with exponent 1."""
    if n < 0:
        raise ValueError(f"primorial requires n >= 0, got {n}")
    limit = 1 << 10
    while len(_primes) < n:
        _ensure_sieve(limit)
        limit *= 2
    chosen = _primes[:n]
    value = 1
    for p in chosen:
        value *= p
    return FactoredInt(value, tuple((p, 1) for p in chosen))


def _divisor_vectors(fi: FactoredInt):
    for vec in product(*(range(e + 1) for _, e in fi.factors)):
        if any(vec):
            yield vec


def divisor_power_pairs(fi: FactoredInt) -> list[tuple[int, int]]:
    """All pairs (d, i) with d >= 2, i >= 1 and d**i dividing fi.value.

    Materialized from the exponent lattice rather than a 2..n scan, so the
    cost is proportional to the divisor count.  Sorted by d, then i.
    """
    if fi.value == 1:
        raise ValueError("the unit 1 has no divisors >= 2")
    pairs = []
    for vec in _divisor_vectors(fi):
        d = 1
        for (p, _), c in zip(fi.factors, vec):
            d *= p**c
        i_max = min(e // c for (_, e), c in zip(fi.factors, vec) if c)
        pairs.extend((d, i) for i in range(1, i_max + 1))
    pairs.sort()
    return pairs


def divisor_power_reductions(fi: FactoredInt) -> list[tuple[int, int, FactoredInt]]:
    """Like :func:`divisor_power_pairs`, but each entry carries n / d**i
    already factored, ready for recursive descent."""
    if fi.value == 1:
        raise ValueError("the unit 1 has no divisors >= 2")
    out = []
    for vec in _divisor_vectors(fi):
        d = 1
        for (p, _), c in zip(fi.factors, vec):
            d *= p**c
        i_max = min(e // c for (_, e), c in zip(fi.factors, vec) if c)
        value = fi.value
        for i in range(1, i_max + 1):
            value //= d
            reduced = tuple(
                (p, e - i * c) for (p, e), c in zip(fi.factors, vec) if e - i * c
            )
            out.append((d, i, FactoredInt(value, reduced)))
    out.sort(key=lambda entry: (entry[0], entry[1]))
    return out


def kappa(pi: int, n: int) -> int:
    """Largest m such that pi**m divides n (pi prime, n >= 1)."""
    if n < 1:
        raise ValueError(f"kappa requires n >= 1, got {n}")
    m = 0
    while n % pi == 0:
        n //= pi
        m += 1
    return m


def binomial(n: int, k: int) -> BigCount:
    """Binomial coefficient, 0 whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def smallest_prime_factor(n: int) -> int:
    """Least prime dividing n, for n >= 2."""
    if n < 2:
        raise ValueError(f"smallest_prime_factor requires n >= 2, got {n}")
    _ensure_sieve(isqrt(n) + 1)
    for p in _primes:
        if p * p > n:
            break
        if n % p == 0:
            return p
    return n
