"""Partition-side counts and identity checkers.

Partitions of n classified by distinct part values (the additive shadow of the
factorization counts, reached by evaluating them at prime powers), Stirling
numbers of the second kind, Bell numbers, and exact identities tying all of
these to partition sums and primorial evaluations.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import BigCount, IntegrityError, primorial
from .counting import f_k_rec, f_total
from .partitions import h_weight, multiplicity_vector, partitions_of, theta_sign

IDENTITIES = (
    "stirling-partial-sum",
    "bell-partition-sum",
    "stirling-adjacent-sum",
    "choose2-plus-one",
    "composition-aggregate",
    "primorial-stirling",
    "primorial-bell",
)

_K_INDEXED_IDENTITIES = frozenset({"stirling-partial-sum", "stirling-adjacent-sum",
                                   "primorial-stirling"})

__all__ = [
    "IDENTITIES",
    "IdentityReport",
    "bell",
    "check_identity",
    "clear_caches",
    "p_kl",
    "r_l",
    "r_lj",
    "stirling2",
]


@dataclass(frozen=True)
class IdentityReport:
    """Result of evaluating both sides of one identity; passed iff lhs == rhs."""

    identity: str
    n: int
    k: int | None
    lhs: BigCount
    rhs: BigCount
    passed: bool


_P_KL: dict[tuple[int, int, int], int] = {}
_R_L: dict[tuple[int, int], int] = {}
_R_LJ: dict[tuple[int, int, int], int] = {}

# stirling rows are append-only; row n holds S(n, 0..n)
_stirling_rows: list[list[int]] = [[1]]


def clear_caches() -> None:
    _P_KL.clear()
    _R_L.clear()
    _R_LJ.clear()
    del _stirling_rows[1:]


def p_kl(n: int, k: int, l: int) -> BigCount:
    """Partitions of n with exactly k parts, of which exactly l are different.

    Computed by the triple-sum recursion
    n * p_{k,l}(n) = sum_{d=1..n} d * sum_{j=1..l} (-1)**(j+1)
                     * sum_{i=1..n//d} C(i, j) * p_{k-i, l-j}(n - i*d),
    with boundary p_{k,l}(0) = [k == l == 0] and 0 for any negative index.
    """
    if n < 0 or k < 0 or l < 0:
        return 0
    if n == 0:
        return 1 if k == 0 and l == 0 else 0
    if k == 0 or l == 0 or k > n or l > k or l * (l + 1) > 2 * n:
        return 0
    key = (n, k, l)
    hit = _P_KL.get(key)
    if hit is not None:
        return hit
    total = 0
    for d in range(1, n + 1):
        for j in range(1, l + 1):
            inner = 0
            for i in range(1, n // d + 1):
                c = comb(i, j) if i >= j else 0
                if c:
                    sub = p_kl(n - i * d, k - i, l - j)
                    if sub:
                        inner += c * sub
            if inner:
                total += d * inner if j & 1 else -d * inner
    q, r = divmod(total, n)
    if r:
        raise IntegrityError(f"p_{{{k},{l}}}({n}) sum {total} not divisible by {n}")
    _P_KL[key] = q
    return q


def r_l(n: int, l: int) -> BigCount:
    """Partitions of n with exactly l different part values; same recursion
    shape as :func:`p_kl` without the part-count index, and the first such
    recursion with no auxiliary function."""
    if n < 0 or l < 0:
        return 0
    if n == 0:
        return 1 if l == 0 else 0
    if l == 0 or l * (l + 1) > 2 * n:
        return 0
    key = (n, l)
    hit = _R_L.get(key)
    if hit is not None:
        return hit
    total = 0
    for d in range(1, n + 1):
        for j in range(1, l + 1):
            inner = 0
            for i in range(1, n // d + 1):
                c = comb(i, j) if i >= j else 0
                if c:
                    sub = r_l(n - i * d, l - j)
                    if sub:
                        inner += c * sub
            if inner:
                total += d * inner if j & 1 else -d * inner
    q, r = divmod(total, n)
    if r:
        raise IntegrityError(f"r_{l}({n}) sum {total} not divisible by {n}")
    _R_L[key] = q
    return q


def r_lj(n: int, l: int, j: int) -> BigCount:
    """Partitions of n with exactly l different part values, all parts >= j.

    Splits on the number i of parts equal to j:
    r_{l,j}(n) = r_{l,j+1}(n) + sum_{i=1..n//j} r_{l-1,j+1}(n - i*j).
    r_l(n) is the j = 1 case.
    """
    if j < 1:
        raise ValueError(f"r_lj requires j >= 1, got {j}")
    if n < 0 or l < 0:
        return 0
    if l == 0:
        return 1 if n == 0 else 0
    if j * l > n:
        return 0
    key = (n, l, j)
    hit = _R_LJ.get(key)
    if hit is not None:
        return hit
    total = r_lj(n, l, j + 1)
    for i in range(1, n // j + 1):
        total += r_lj(n - i * j, l - 1, j + 1)
    _R_LJ[key] = total
    return total


def stirling2(n: int, k: int) -> BigCount:
    """Stirling number of the second kind by the standard triangle
    S(n, k) = k * S(n-1, k) + S(n-1, k-1); S(0, 0) = 1."""
    if n < 0 or k < 0 or k > n:
        return 0
    while len(_stirling_rows) <= n:
        prev = _stirling_rows[-1]
        m = len(_stirling_rows)
        row = [0] * (m + 1)
        for i in range(1, m + 1):
            row[i] = i * prev[i] if i < m else 0
            row[i] += prev[i - 1]
        _stirling_rows.append(row)
    return _stirling_rows[n][k]


def bell(n: int) -> BigCount:
    """Bell number: total set partitions of n labeled items."""
    if n < 0:
        raise ValueError(f"bell requires n >= 0, got {n}")
    stirling2(n, 0)  # force the triangle out to row n
    return sum(_stirling_rows[n])


def _weighted_power_sum(k: int, n: int, signed: bool) -> BigCount:
    """sum over partitions of k of (+-) h(beta) * beta_1**n, asserted integral."""
    total = Fraction(0)
    for p in partitions_of(k):
        beta = multiplicity_vector(p)
        b1 = beta[0] if beta else 0
        if b1 == 0:
            continue
        term = h_weight(beta) * b1**n
        if signed:
            term *= theta_sign(beta)
        total += term
    if total.denominator != 1:
        raise IntegrityError(f"partition power sum (k={k}, n={n}) non-integral: {total}")
    return int(total)


def check_identity(identity: str, n: int, k: int | None = None) -> IdentityReport:
    """Evaluate both sides of one named identity with exact arithmetic.

    Identities:

    - ``stirling-partial-sum``: sum_{i<=k} S(n, i)  ==  partition power sum over k
    - ``bell-partition-sum``: B_n  ==  partition power sum over n
    - ``stirling-adjacent-sum``: S(n, k) + S(n, k-1)  ==  signed power sum over k
    - ``choose2-plus-one``: C(n, 2) + 1  ==  signed power sum over n
    - ``composition-aggregate``: per-multiplicity-vector composition sums match
      the partition weights for index n; lhs counts matches, rhs counts vectors
    - ``primorial-stirling``: k-part factorization count of the n-th primorial
      equals S(n, k)
    - ``primorial-bell``: factorization count of the n-th primorial equals B_n

    k-indexed identities require 1 <= k <= n.
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if identity in _K_INDEXED_IDENTITIES:
        if k is None or not 1 <= k <= n:
            raise ValueError(f"{identity} requires 1 <= k <= n, got k={k}, n={n}")
    else:
        k = None

    if identity == "stirling-partial-sum":
        lhs = sum(stirling2(n, i) for i in range(1, k + 1))
        rhs = _weighted_power_sum(k, n, signed=False)
    elif identity == "bell-partition-sum":
        lhs = bell(n)
        rhs = _weighted_power_sum(n, n, signed=False)
    elif identity == "stirling-adjacent-sum":
        lhs = stirling2(n, k) + stirling2(n, k - 1)
        rhs = _weighted_power_sum(k, n, signed=True)
    elif identity == "choose2-plus-one":
        lhs = comb(n, 2) + 1
        rhs = _weighted_power_sum(n, n, signed=True)
    elif identity == "composition-aggregate":
        # avoid a rational-valued report: count the vectors that match
        from .partitions import aggregate_fedorov

        betas = [multiplicity_vector(p) for p in partitions_of(n)]
        lhs = sum(1 for b in betas if aggregate_fedorov(n, b) == h_weight(b))
        rhs = len(betas)
    elif identity == "primorial-stirling":
        lhs = f_k_rec(primorial(n), k)
        rhs = stirling2(n, k)
    else:  # primorial-bell
        lhs = f_total(primorial(n))
        rhs = bell(n)
    return IdentityReport(identity, n, k, lhs, rhs, lhs == rhs)
