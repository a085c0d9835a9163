"""Tests for the factorization-counting routes and their agreement."""

import pytest

from multifact import counting, oracle
from multifact.arith import factorize, prime_power
from multifact.counting import (
    CountQuery,
    big_F,
    big_G,
    f_from_F,
    f_k_kappa,
    f_k_rec,
    f_kl,
    f_total,
    f_total_fedorov,
    f_total_kappa,
    f_total_rec,
    fedorov_F,
    g_from_G,
    g_k_kappa,
    g_k_rec,
    g_total,
    g_total_kappa,
    g_total_rec,
    h_l,
)

FI36 = factorize(36)
FI1 = factorize(1)
FI_P = factorize(97)


# ---------------------------------------------------------------- big_F / big_G

def test_big_F_values():
    assert big_F(FI36, 2) == 5  # f_1 + f_2 = 1 + 4
    assert big_F(FI_P, 3) == 1  # hand evaluation: 1/3*0 + 1/2*1 + 1/6*3
    assert big_F(FI36, 1) == 1
    assert big_F(factorize(5), 1) == 1


def test_big_F_boundaries():
    assert big_F(FI1, 0) == 1
    assert big_F(FI36, 0) == 0
    assert all(big_F(FI1, k) == 1 for k in range(1, 8))


def test_big_G_values():
    assert big_G(FI36, 2) == 4  # g_2 + g_1 = 3 + 1
    assert big_G(FI_P, 3) == 0  # hand evaluation: 0 - 1/2 + 1/2
    assert big_G(FI36, 1) == 1  # g_1 + g_0 = 1 + 0


def test_big_G_boundaries():
    assert big_G(FI1, 0) == 1
    assert big_G(FI1, 1) == 1
    assert big_G(FI1, 2) == 0
    assert big_G(FI36, 0) == 0


# ---------------------------------------------------------------- recursions

def test_f_k_rec_paper_values():
    assert f_k_rec(FI36, 2) == 4
    assert sum(f_k_rec(factorize(12), k) for k in range(1, 4)) == 4
    assert sum(f_k_rec(factorize(75), k) for k in range(1, 4)) == 4
    assert f_k_rec(FI1, 0) == 1
    assert f_k_rec(FI1, 3) == 0


def test_g_k_rec_values():
    assert g_k_rec(FI36, 2) == 3
    assert g_k_rec(FI36, 1) == 1
    assert g_k_rec(factorize(49), 2) == 0  # only (p*p) repeats


def test_kappa_recursions():
    assert f_k_kappa(FI36, 2) == 4
    assert g_k_kappa(FI36, 2) == 3
    assert f_k_kappa(factorize(8), 2) == 1  # (2, 4)


def test_kappa_recursion_prime_choice_is_value_irrelevant():
    # the same counts come out whichever prime anchors the recursion
    counting.clear_caches()
    via_2 = f_kl(FI36, 3, 2, pi=2)
    counting.clear_caches()
    via_3 = f_kl(FI36, 3, 2, pi=3)
    assert via_2 == via_3 == 2
    counting.clear_caches()


# ---------------------------------------------------------------- conversions

def test_f_from_F():
    assert f_from_F(FI36, 2) == 4
    assert f_from_F(FI36, 1) == 1
    assert f_from_F(FI1, 1) == 0


def test_g_from_G():
    assert g_from_G(FI36, 2) == 3
    assert g_from_G(FI36, 1) == 1


def test_totals():
    assert f_total(FI36) == 9
    assert f_total(factorize(12)) == 4
    assert f_total(factorize(30)) == 5  # squarefree with 3 primes
    assert g_total(FI36) == 5
    assert g_total(factorize(30)) == 5
    assert g_total(FI_P) == 1


def test_total_routes_agree():
    for n in (2, 12, 30, 36, 96, 97, 360, 1024):
        fi = factorize(n)
        assert (
            f_total(fi)
            == f_total_rec(fi)
            == f_total_kappa(fi)
            == f_total_fedorov(fi)
        )
        assert g_total(fi) == g_total_rec(fi) == g_total_kappa(fi)


# ---------------------------------------------------------------- f_kl / h_l

def test_f_kl_values():
    assert f_kl(FI36, 3, 2) == 2
    assert f_kl(FI36, 2, 2) == 3  # (18,2), (9,4), (12,3)
    assert f_kl(FI1, 0, 0) == 1
    assert f_kl(FI1, 1, 1) == 0
    assert f_kl(FI36, 2, 3) == 0  # l > k


def test_h_l_values():
    assert h_l(FI36, 2) == 6
    assert h_l(FI36, 1) == 2  # (36) and (6,6); fixed by the oracle
    assert h_l(FI36, 3) == 1  # (6,3,2)
    assert h_l(FI1, 0) == 1
    assert h_l(FI1, 1) == 0


def test_fedorov_F_values():
    assert fedorov_F(FI36, 2) == 5
    assert fedorov_F(FI1, 1) == 1
    for k in range(1, 6):
        assert fedorov_F(FI_P, k) == 1


# ---------------------------------------------------------------- properties

def test_route_agreement_sweep():
    # for n >= 2 every route, including k = 0, is defined and must agree
    for n in range(2, 401):
        fi = factorize(n)
        prof = oracle.profile(n)
        for k in range(0, fi.big_omega + 3):
            F = big_F(fi, k)
            assert fedorov_F(fi, k) == F
            assert prof.F_k(k) == F
            fk = f_k_rec(fi, k)
            assert f_k_kappa(fi, k) == fk
            assert f_from_F(fi, k) == fk
            assert prof.f_k.get(k, 0) == fk
            gk = g_k_rec(fi, k)
            assert g_k_kappa(fi, k) == gk
            assert g_from_G(fi, k) == gk
            assert prof.g_k.get(k, 0) == gk
            assert big_G(fi, k) == prof.G_k(k)


def test_two_index_counts_aggregate_consistently():
    # summing the two-index counts over k gives the distinct-value counts,
    # and the diagonal k = l is the all-distinct count
    for n in range(2, 401):
        fi = factorize(n)
        om = fi.big_omega
        for l in range(1, om + 1):
            assert h_l(fi, l) == sum(f_kl(fi, k, l) for k in range(l, om + 1))
        for k in range(1, om + 1):
            assert f_kl(fi, k, k) == g_k_rec(fi, k)


def test_prime_independence_pairs():
    pairs = [(12, 75), (36, 225), (24, 375), (30, 1001), (48, 1875), (72, 200)]
    for a, b in pairs:
        fa, fb = factorize(a), factorize(b)
        assert f_total(fa) == f_total(fb)
        assert g_total(fa) == g_total(fb)
        om = fa.big_omega
        for k in range(0, om + 2):
            assert f_k_rec(fa, k) == f_k_rec(fb, k)
            assert g_k_rec(fa, k) == g_k_rec(fb, k)
            assert big_F(fa, k) == big_F(fb, k)
            assert big_G(fa, k) == big_G(fb, k)
            for l in range(1, k + 1):
                assert f_kl(fa, k, l) == f_kl(fb, k, l)
        for l in range(1, om + 1):
            assert h_l(fa, l) == h_l(fb, l)


def test_big_F_monotone_and_stabilizes():
    for n in range(2, 201):
        fi = factorize(n)
        om = fi.big_omega
        total = f_total(fi)
        prev = 0
        for k in range(0, om + 4):
            cur = big_F(fi, k)
            assert cur >= prev
            prev = cur
            if k >= om:
                assert cur == total


def test_f_kl_on_prime_powers():
    # partitions of 6 with 3 parts and 2 distinct values: (4,1,1), (2,2,2)
    # has one of each shape -> check against direct enumeration
    fi = prime_power(2, 6)
    pp = oracle.partition_profile(6)
    for k in range(1, 7):
        for l in range(1, k + 1):
            assert f_kl(fi, k, l) == pp.get((k, l), 0)


def test_count_query_validation():
    CountQuery("f_k", FI36, k=2)
    CountQuery("f", FI36)
    CountQuery("f_kl", FI36, k=2, l=1)
    with pytest.raises(ValueError):
        CountQuery("f", FI36, k=2)
    with pytest.raises(ValueError):
        CountQuery("f_k", FI36)
    with pytest.raises(ValueError):
        CountQuery("h_l", FI36, k=1, l=1)
    with pytest.raises(ValueError):
        CountQuery("nope", FI36)
