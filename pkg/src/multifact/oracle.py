"""Brute-force ground truth by exhaustive enumeration.

Deliberately naive and kept independent of the formula and recursion modules:
everything here works from first principles (divisor scans, part-by-part
descent) so that agreement with the fast routes is meaningful evidence.
"""

from collections import Counter
from dataclasses import dataclass
from math import comb, isqrt

from .arith import BigCount

DEFAULT_MAX_FACTORIZATIONS = 1_000_000

__all__ = [
    "DEFAULT_MAX_FACTORIZATIONS",
    "FactorizationMultiset",
    "OracleLimitError",
    "OracleProfile",
    "colored_partition_count",
    "enumerate_factorizations",
    "enumerate_partitions",
    "partition_profile",
    "profile",
]

# One unordered factorization: parts >= 2, sorted nondecreasing.
FactorizationMultiset = tuple[int, ...]


class OracleLimitError(RuntimeError):
    """Enumeration would exceed the configured factorization budget."""


def _sorted_divisors(n: int) -> list[int]:
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    large.reverse()
    return small + large


def _descend(m: int, lo: int):
    # nondecreasing parts: commit the least part first, then recurse
    for d in _sorted_divisors(m):
        if d < lo:
            continue
        if d == m:
            yield (d,)
        else:
            for rest in _descend(m // d, d):
                yield (d, *rest)


def enumerate_factorizations(
    n: int, min_part: int = 2, max_count: int = DEFAULT_MAX_FACTORIZATIONS
):
    """Yield every unordered factorization of n into parts >= min_part.

    Each factorization appears exactly once, as a nondecreasing tuple, in a
    deterministic order.  Raises :class:`OracleLimitError` past ``max_count``
    factorizations rather than running unbounded.
    """
    if n < 2:
        raise ValueError(f"enumerate_factorizations requires n >= 2, got {n}")
    if min_part < 2:
        raise ValueError(f"min_part must be >= 2, got {min_part}")
    count = 0
    for parts in _descend(n, min_part):
        count += 1
        if count > max_count:
            raise OracleLimitError(
                f"more than {max_count} factorizations of {n}; raise max_count to proceed"
            )
        yield parts


@dataclass
class OracleProfile:
    """Exhaustive counts for one n, classified every way at once.

    ``f_k`` maps part-count k to a count, ``g_k`` the same restricted to
    all-distinct factorizations, ``f_kl`` maps (parts, distinct values), and
    ``h_l`` maps the number of distinct values.  Absent keys mean zero.
    """

    n: int
    f: BigCount
    g: BigCount
    f_k: dict[int, BigCount]
    g_k: dict[int, BigCount]
    f_kl: dict[tuple[int, int], BigCount]
    h_l: dict[int, BigCount]

    def F_k(self, k: int) -> BigCount:
        """Factorizations with exactly k parts >= 1 (pad with 1s)."""
        return sum(self.f_k.get(i, 0) for i in range(1, k + 1))

    def G_k(self, k: int) -> BigCount:
        """Factorizations with exactly k distinct parts >= 1."""
        return self.g_k.get(k, 0) + self.g_k.get(k - 1, 0)


def profile(n: int, max_count: int = DEFAULT_MAX_FACTORIZATIONS) -> OracleProfile:
    """Enumerate all factorizations of n and classify them into every counter."""
    f = 0
    g = 0
    f_k: Counter = Counter()
    g_k: Counter = Counter()
    f_kl: Counter = Counter()
    h_l: Counter = Counter()
    for parts in enumerate_factorizations(n, 2, max_count):
        k = len(parts)
        l = len(set(parts))
        f += 1
        f_k[k] += 1
        f_kl[(k, l)] += 1
        h_l[l] += 1
        if k == l:
            g += 1
            g_k[k] += 1
    return OracleProfile(n, f, g, dict(f_k), dict(g_k), dict(f_kl), dict(h_l))


def enumerate_partitions(n: int):
    """Yield every partition of n exactly once, as a nonincreasing tuple.

    Uses the ascending-composition algorithm, a different code path from the
    descending recursive iterator in :mod:`multifact.partitions`.
    """
    if n < 0:
        raise ValueError(f"enumerate_partitions requires n >= 0, got {n}")
    if n == 0:
        yield ()
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        last = k + 1
        while x <= y:
            a[k] = x
            a[last] = y
            yield tuple(a[last::-1])
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield tuple(a[k::-1])


def partition_profile(n: int) -> dict[tuple[int, int], BigCount]:
    """Partition counts of n keyed by (number of parts, distinct part values)."""
    counts: Counter = Counter()
    for parts in enumerate_partitions(n):
        counts[(len(parts), len(set(parts)))] += 1
    return dict(counts)


def colored_partition_count(beta, m: int) -> BigCount:
    """Partitions of m into parts i with beta_i >= 1, counted with colors.

    A part value i used c times contributes comb(beta_i + c - 1, c) ways to
    pick a multiset of c colors out of beta_i.  This reproduces the Euler
    transform by direct enumeration, with no shared code.
    """
    if m < 0:
        return 0
    allowed = [i for i, b in enumerate(beta, 1) if b > 0]

    def count(rem: int, idx: int) -> int:
        if rem == 0:
            return 1
        if idx == len(allowed):
            return 0
        i = allowed[idx]
        colors = beta[i - 1]
        total = 0
        for c in range(rem // i + 1):
            total += comb(colors + c - 1, c) * count(rem - c * i, idx + 1)
        return total

    return count(m, 0)
