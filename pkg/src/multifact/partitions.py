"""Partition and composition combinatorics of the part-count index k.

Provides the iterators over partitions and compositions, the exact rational
weights attached to them, the sign exponent, and the Euler transform of a
multiplicity vector together with its multiplicative extension to factored
integers.
"""

from fractions import Fraction
from math import factorial

from .arith import BigCount, ExactRational, FactoredInt, IntegrityError

Partition = tuple[int, ...]
MultiplicityVector = tuple[int, ...]
Composition = tuple[int, ...]

__all__ = [
    "Composition",
    "MultiplicityVector",
    "Partition",
    "aggregate_fedorov",
    "clear_caches",
    "compositions_of",
    "euler_transform",
    "fedorov_weight",
    "gamma",
    "h_weight",
    "mu_beta",
    "multiplicity_vector",
    "nu_beta",
    "partitions_of",
    "theta_sign",
]


def partitions_of(k: int):
    """Yield every partition of k exactly once, as a nonincreasing tuple.

    Order is descending lexicographic: (k), (k-1, 1), ..., (1,)*k.  The empty
    partition is the single partition of 0.
    """
    if k < 0:
        raise ValueError(f"partitions_of requires k >= 0, got {k}")

    def descend(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in descend(remaining - first, first):
                yield (first, *rest)

    yield from descend(k, k)


def multiplicity_vector(parts) -> MultiplicityVector:
    """Count how many parts equal each value 1..max(parts).

    Order of the input parts is irrelevant, so this accepts partitions and
    compositions alike.  The empty sequence maps to the empty vector.
    """
    if not parts:
        return ()
    beta = [0] * max(parts)
    for part in parts:
        beta[part - 1] += 1
    return tuple(beta)


def h_weight(beta) -> ExactRational:
    """Weight 1 / (prod_i i**beta_i * beta_i!) of a multiplicity vector.

    This is 1/k! times the number of permutations of k objects whose cycle
    type is beta; the empty vector has weight 1.
    """
    denom = 1
    for i, b in enumerate(beta, 1):
        if b:
            denom *= i**b * factorial(b)
    return Fraction(1, denom)


def theta_sign(beta) -> int:
    """(-1) to the power sum_i (1+i)*beta_i, computed mod 2."""
    parity = sum((1 + i) * b for i, b in enumerate(beta, 1)) & 1
    return -1 if parity else 1


def gamma(beta, m: int) -> BigCount:
    """Sum of d * beta_d over the divisors d of m (beta_d = 0 past the vector)."""
    if m < 1:
        raise ValueError(f"gamma requires m >= 1, got {m}")
    total = 0
    for d in range(1, min(len(beta), m) + 1):
        if beta[d - 1] and m % d == 0:
            total += d * beta[d - 1]
    return total


# Whole prefixes nu(1..m) are computed in one pass and cached per beta, since
# a single factored n needs nu at every one of its exponents.  Entries are
# immutable tuples swapped atomically; rewrites are idempotent, so the cache
# is safe to share between threads.
_nu_cache: dict[MultiplicityVector, tuple[int, ...]] = {}


def _nu_prefix(beta, m_max: int) -> tuple[int, ...]:
    beta = tuple(beta)
    known = _nu_cache.get(beta, ())
    if len(known) >= m_max:
        return known
    gammas = [gamma(beta, m) for m in range(1, m_max + 1)]
    nu = list(known)
    for m in range(len(nu) + 1, m_max + 1):
        acc = gammas[m - 1]
        for j in range(1, m):
            g = gammas[j - 1]
            if g:
                acc += g * nu[m - j - 1]
        q, r = divmod(acc, m)
        if r:
            raise IntegrityError(
                f"euler transform of {beta} non-integral at m={m}: {acc}/{m}"
            )
        nu.append(q)
    frozen = tuple(nu)
    _nu_cache[beta] = frozen
    return frozen


def euler_transform(beta, m_max: int) -> list[BigCount]:
    """Values nu_beta(1..m_max) of the Euler transform of beta.

    nu_beta(m) counts the partitions of m in which part i may appear in
    beta_i colors; equivalently it is the coefficient stream of
    prod_i (1 - x**i)**(-beta_i).  The recursion divides by m at each step
    and that division is always exact; a nonzero remainder raises
    :class:`IntegrityError` since it can only mean a bug.
    """
    if m_max < 1:
        raise ValueError(f"euler_transform requires m_max >= 1, got {m_max}")
    return list(_nu_prefix(beta, m_max)[:m_max])


def nu_beta(beta, m: int) -> BigCount:
    """Single Euler-transform value; nu_beta(0) == 1 (the empty partition)."""
    if m == 0:
        return 1
    return _nu_prefix(beta, m)[m - 1]


def mu_beta(beta, fi: FactoredInt) -> BigCount:
    """Multiplicative extension: product of nu_beta at the prime exponents of fi.

    The unit 1 gives the empty product, 1.
    """
    result = 1
    for e in fi.exponents:
        v = nu_beta(beta, e)
        if v == 0:
            return 0
        result *= v
    return result


def compositions_of(k: int):
    """Yield all 2**(k-1) ordered sequences of positive parts summing to k.

    Ascending lexicographic order; the empty composition is the single
    composition of 0.
    """
    if k < 0:
        raise ValueError(f"compositions_of requires k >= 0, got {k}")
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        if first == k:
            yield (k,)
        else:
            for rest in compositions_of(k - first):
                yield (first, *rest)


def fedorov_weight(comp) -> ExactRational:
    """Reciprocal of the product of the prefix sums of an ordered part sequence."""
    denom = 1
    acc = 0
    for part in comp:
        acc += part
        denom *= acc
    return Fraction(1, denom)


def aggregate_fedorov(k: int, beta) -> ExactRational:
    """Sum of fedorov_weight over the compositions of k whose part
    multiplicities equal beta.

    Equals h_weight(beta); the number of addends is (sum beta_i)! / prod beta_i!.
    """
    beta = tuple(beta)
    if sum(i * b for i, b in enumerate(beta, 1)) != k:
        raise ValueError(f"beta {beta} does not have weight {k}")
    total = Fraction(0)
    for comp in compositions_of(k):
        if multiplicity_vector(comp) == beta:
            total += fedorov_weight(comp)
    return total


def clear_caches() -> None:
    """Drop the memoized Euler-transform prefixes (used by benchmarks)."""
    _nu_cache.clear()
