"""Factorization-counting functions of a factored integer, each computable by
every route the library supports: partition sums, divisor recursions, the
prime-exponent (kappa) recursions, and composition sums.

All results are exact nonnegative integers.  Every function depends on n only
through its prime signature, so every cache here is keyed on
(prime_signature(n), indices); that collapse is the main performance lever.
Cache writes are idempotent (values are deterministic), so concurrent queries
are safe and scheduling-independent.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import (
    BigCount,
    FactoredInt,
    IntegrityError,
    binomial,
    divisor_power_reductions,
    kappa,
    prime_signature,
)
from .partitions import (
    compositions_of,
    fedorov_weight,
    h_weight,
    mu_beta,
    multiplicity_vector,
    nu_beta,
    partitions_of,
    theta_sign,
)

METHODS = ("partition-sum", "recursion", "kappa-recursion", "fedorov", "oracle")
FUNCTIONS = ("f", "g", "f_k", "g_k", "F_k", "G_k", "h_l", "f_kl")
K_INDEXED = frozenset({"f_k", "g_k", "F_k", "G_k", "f_kl"})
L_INDEXED = frozenset({"h_l", "f_kl"})

__all__ = [
    "FUNCTIONS",
    "K_INDEXED",
    "L_INDEXED",
    "METHODS",
    "CountQuery",
    "big_F",
    "big_G",
    "clear_caches",
    "f_from_F",
    "f_k_kappa",
    "f_k_rec",
    "f_kl",
    "f_total",
    "f_total_fedorov",
    "f_total_kappa",
    "f_total_rec",
    "fedorov_F",
    "g_from_G",
    "g_k_kappa",
    "g_k_rec",
    "g_total",
    "g_total_kappa",
    "g_total_rec",
    "h_l",
]


@dataclass(frozen=True)
class CountQuery:
    """One counting request; index arity is validated against the function."""

    function: str
    n: FactoredInt
    k: int | None = None
    l: int | None = None

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")
        if (self.k is not None) != (self.function in K_INDEXED):
            raise ValueError(f"{self.function} takes k iff it is k-indexed")
        if (self.l is not None) != (self.function in L_INDEXED):
            raise ValueError(f"{self.function} takes l iff it is l-indexed")


_F_SUM: dict = {}
_G_SUM: dict = {}
_FED: dict = {}
_FK_REC: dict = {}
_GK_REC: dict = {}
_FK_KAP: dict = {}
_GK_KAP: dict = {}
_FKL: dict = {}
_HL: dict = {}


@lru_cache(maxsize=None)
def _betas(k: int) -> tuple:
    return tuple(multiplicity_vector(p) for p in partitions_of(k))


def clear_caches() -> None:
    """Drop all memo tables (benchmarks time cold runs)."""
    for cache in (_F_SUM, _G_SUM, _FED, _FK_REC, _GK_REC, _FK_KAP, _GK_KAP, _FKL, _HL):
        cache.clear()
    _betas.cache_clear()


# --------------------------------------------------------------------------
# partition-sum route

def big_F(n: FactoredInt, k: int) -> BigCount:
    """Factorizations of n into exactly k parts >= 1, via the partition sum.

    Accumulates h(beta) * prod_j nu_beta(e_j) over the partitions of k in
    exact rationals; the total is always an integer and a fractional result
    raises :class:`IntegrityError`.  F_0(n) = [n == 1]; F_k(1) = 1.
    """
    if k < 0:
        return 0
    key = (prime_signature(n), k)
    hit = _F_SUM.get(key)
    if hit is not None:
        return hit
    exps = n.exponents
    total = Fraction(0)
    for beta in _betas(k):
        weight = 1
        for e in exps:
            weight *= nu_beta(beta, e)
            if not weight:
                break
        if weight:
            total += h_weight(beta) * weight
    if total.denominator != 1:
        raise IntegrityError(f"F_{k}({n.value}) partition sum non-integral: {total}")
    value = int(total)
    _F_SUM[key] = value
    return value


def big_G(n: FactoredInt, k: int) -> BigCount:
    """Factorizations of n into exactly k distinct parts >= 1; signed partition sum."""
    if k < 0:
        return 0
    key = (prime_signature(n), k)
    hit = _G_SUM.get(key)
    if hit is not None:
        return hit
    exps = n.exponents
    total = Fraction(0)
    for beta in _betas(k):
        weight = 1
        for e in exps:
            weight *= nu_beta(beta, e)
            if not weight:
                break
        if weight:
            total += theta_sign(beta) * h_weight(beta) * weight
    if total.denominator != 1:
        raise IntegrityError(f"G_{k}({n.value}) partition sum non-integral: {total}")
    value = int(total)
    _G_SUM[key] = value
    return value


def fedorov_F(n: FactoredInt, k: int) -> BigCount:
    """big_F by the composition-sum route: sum of H(alpha) * mu_beta(n) over
    all 2**(k-1) compositions of k."""
    if k < 0:
        return 0
    if k == 0:
        return 1 if n.value == 1 else 0
    key = (prime_signature(n), k)
    hit = _FED.get(key)
    if hit is not None:
        return hit
    total = Fraction(0)
    for comp in compositions_of(k):
        m = mu_beta(multiplicity_vector(comp), n)
        if m:
            total += fedorov_weight(comp) * m
    if total.denominator != 1:
        raise IntegrityError(f"F_{k}({n.value}) composition sum non-integral: {total}")
    value = int(total)
    _FED[key] = value
    return value


# --------------------------------------------------------------------------
# divisor recursions

def f_k_rec(n: FactoredInt, k: int) -> BigCount:
    """Factorizations into exactly k parts >= 2, via the divisor-power recursion
    k * f_k(n) = sum over d**i | n, d >= 2 of f_{k-i}(n / d**i)."""
    if k < 0:
        return 0
    if n.value == 1:
        return 1 if k == 0 else 0
    if k == 0 or k > n.big_omega:
        return 0
    key = (prime_signature(n), k)
    hit = _FK_REC.get(key)
    if hit is not None:
        return hit
    total = 0
    for _, i, rest in divisor_power_reductions(n):
        if i <= k:
            total += f_k_rec(rest, k - i)
    q, r = divmod(total, k)
    if r:
        raise IntegrityError(f"f_{k}({n.value}) recursion sum {total} not divisible by {k}")
    _FK_REC[key] = q
    return q


def g_k_rec(n: FactoredInt, k: int) -> BigCount:
    """Factorizations into exactly k distinct parts >= 2; alternating recursion
    with sign (-1)**(i+1) on the d**i term."""
    if k < 0:
        return 0
    if n.value == 1:
        return 1 if k == 0 else 0
    if k == 0 or k > n.big_omega:
        return 0
    key = (prime_signature(n), k)
    hit = _GK_REC.get(key)
    if hit is not None:
        return hit
    total = 0
    for _, i, rest in divisor_power_reductions(n):
        if i <= k:
            sub = g_k_rec(rest, k - i)
            total += sub if i & 1 else -sub
    q, r = divmod(total, k)
    if r:
        raise IntegrityError(f"g_{k}({n.value}) recursion sum {total} not divisible by {k}")
    _GK_REC[key] = q
    return q


# --------------------------------------------------------------------------
# prime-exponent (kappa) recursions
#
# These replace the 1/k division by a division by kappa_pi(n), the exponent of
# a chosen prime pi in n.  Any prime dividing n is valid; pi is fixed at the
# top-level n and passed down, and a recursive argument coprime to pi picks a
# fresh pi of its own (its smallest prime factor).  The resulting values are
# pi-independent, which the route-agreement tests enforce.

def _pi_and_exponent(n: FactoredInt, pi: int | None) -> tuple[int, int]:
    if pi is not None:
        for p, e in n.factors:
            if p == pi:
                return pi, e
    p, e = n.factors[0]
    return p, e


def f_k_kappa(n: FactoredInt, k: int, pi: int | None = None) -> BigCount:
    """f_k via kappa_pi(n) * f_k(n) = sum f_{k-i}(n/d**i) * kappa_pi(d)."""
    if k < 0:
        return 0
    if n.value == 1:
        return 1 if k == 0 else 0
    if k == 0 or k > n.big_omega:
        return 0
    key = (prime_signature(n), k)
    hit = _FK_KAP.get(key)
    if hit is not None:
        return hit
    pi, kap_n = _pi_and_exponent(n, pi)
    total = 0
    for d, i, rest in divisor_power_reductions(n):
        if i > k:
            continue
        kap_d = kappa(pi, d)
        if kap_d:
            total += kap_d * f_k_kappa(rest, k - i, pi)
    q, r = divmod(total, kap_n)
    if r:
        raise IntegrityError(
            f"f_{k}({n.value}) kappa sum {total} not divisible by {kap_n}"
        )
    _FK_KAP[key] = q
    return q


def g_k_kappa(n: FactoredInt, k: int, pi: int | None = None) -> BigCount:
    """g_k via the signed kappa recursion."""
    if k < 0:
        return 0
    if n.value == 1:
        return 1 if k == 0 else 0
    if k == 0 or k > n.big_omega:
        return 0
    key = (prime_signature(n), k)
    hit = _GK_KAP.get(key)
    if hit is not None:
        return hit
    pi, kap_n = _pi_and_exponent(n, pi)
    total = 0
    for d, i, rest in divisor_power_reductions(n):
        if i > k:
            continue
        kap_d = kappa(pi, d)
        if kap_d:
            sub = kap_d * g_k_kappa(rest, k - i, pi)
            total += sub if i & 1 else -sub
    q, r = divmod(total, kap_n)
    if r:
        raise IntegrityError(
            f"g_{k}({n.value}) kappa sum {total} not divisible by {kap_n}"
        )
    _GK_KAP[key] = q
    return q


def f_kl(n: FactoredInt, k: int, l: int, pi: int | None = None) -> BigCount:
    """Factorizations with exactly k parts >= 2 of which exactly l are
    different, via the corrected double recursion in kappa form:

    kappa_pi(n) * f_{k,l}(n) =
        sum over d**i | n, d >= 2,  sum over j = 1..min(l, i) of
        (-1)**(j+1) * C(i, j) * f_{k-i, l-j}(n / d**i) * kappa_pi(d)

    Boundary: f_{k,l}(1) = [k == l == 0]; any negative index gives 0.
    """
    if k < 0 or l < 0:
        return 0
    if n.value == 1:
        return 1 if k == 0 and l == 0 else 0
    if k == 0 or l == 0 or l > k or k > n.big_omega:
        return 0
    key = (prime_signature(n), k, l)
    hit = _FKL.get(key)
    if hit is not None:
        return hit
    pi, kap_n = _pi_and_exponent(n, pi)
    total = 0
    for d, i, rest in divisor_power_reductions(n):
        if i > k:
            continue
        kap_d = kappa(pi, d)
        if not kap_d:
            continue
        for j in range(1, min(l, i) + 1):
            sub = f_kl(rest, k - i, l - j, pi)
            if sub:
                term = binomial(i, j) * sub * kap_d
                total += term if j & 1 else -term
    q, r = divmod(total, kap_n)
    if r:
        raise IntegrityError(
            f"f_{{{k},{l}}}({n.value}) kappa sum {total} not divisible by {kap_n}"
        )
    _FKL[key] = q
    return q


def h_l(n: FactoredInt, l: int, pi: int | None = None) -> BigCount:
    """Factorizations with exactly l different part values >= 2, same recursion
    shape as :func:`f_kl` without the part-count index."""
    if l < 0:
        return 0
    if n.value == 1:
        return 1 if l == 0 else 0
    if l == 0 or l > n.big_omega:
        return 0
    key = (prime_signature(n), l)
    hit = _HL.get(key)
    if hit is not None:
        return hit
    pi, kap_n = _pi_and_exponent(n, pi)
    total = 0
    for d, i, rest in divisor_power_reductions(n):
        kap_d = kappa(pi, d)
        if not kap_d:
            continue
        for j in range(1, min(l, i) + 1):
            sub = h_l(rest, l - j, pi)
            if sub:
                term = binomial(i, j) * sub * kap_d
                total += term if j & 1 else -term
    q, r = divmod(total, kap_n)
    if r:
        raise IntegrityError(
            f"h_{l}({n.value}) kappa sum {total} not divisible by {kap_n}"
        )
    _HL[key] = q
    return q


# --------------------------------------------------------------------------
# conversions between the k-parts and at-least-one-part families

def f_from_F(n: FactoredInt, k: int) -> BigCount:
    """f_k recovered as F_k - F_{k-1}."""
    if k < 1:
        return 1 if (k == 0 and n.value == 1) else 0
    return big_F(n, k) - big_F(n, k - 1)


def g_from_G(n: FactoredInt, k: int) -> BigCount:
    """g_k recovered as the alternating sum of G_1..G_k."""
    if k < 1:
        return 1 if (k == 0 and n.value == 1) else 0
    total = 0
    for i in range(1, k + 1):
        term = big_G(n, i)
        total += term if (k - i) % 2 == 0 else -term
    return total


def f_total(n: FactoredInt) -> BigCount:
    """All factorizations into parts >= 2: F evaluated at k = Omega(n).

    Any k >= Omega(n) gives the same value, which the stability tests check.
    """
    return big_F(n, n.big_omega)


def f_total_rec(n: FactoredInt) -> BigCount:
    if n.value == 1:
        return 1
    return sum(f_k_rec(n, k) for k in range(1, n.big_omega + 1))


def f_total_kappa(n: FactoredInt) -> BigCount:
    if n.value == 1:
        return 1
    return sum(f_k_kappa(n, k) for k in range(1, n.big_omega + 1))


def f_total_fedorov(n: FactoredInt) -> BigCount:
    return fedorov_F(n, n.big_omega) if n.value > 1 else 1


def g_total(n: FactoredInt) -> BigCount:
    """All factorizations into distinct parts >= 2:
    sum of G_{Omega - 2i} for i = 0..floor((Omega - 1) / 2)."""
    if n.value == 1:
        return 1
    om = n.big_omega
    return sum(big_G(n, om - 2 * i) for i in range((om - 1) // 2 + 1))


def g_total_rec(n: FactoredInt) -> BigCount:
    if n.value == 1:
        return 1
    return sum(g_k_rec(n, k) for k in range(1, n.big_omega + 1))


def g_total_kappa(n: FactoredInt) -> BigCount:
    if n.value == 1:
        return 1
    return sum(g_k_kappa(n, k) for k in range(1, n.big_omega + 1))
