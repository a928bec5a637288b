from fractions import Fraction as F
from math import gcd

import pytest

from arithdyn.errors import DomainError
from arithdyn.galois import (
    cyclotomic_degree_qp,
    galcor_lower_bound,
    lifting_exponent,
    mult_order,
    padic_degree_bound,
)
from arithdyn.polymap import PolyMap
from oracles import naive_order


def _totient(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def test_mult_order_examples():
    assert mult_order(2, 5) == 4
    assert mult_order(7, 9) == 3
    assert mult_order(3, 8) == 2


def test_mult_order_rejects_noncoprime():
    with pytest.raises(DomainError):
        mult_order(6, 9)
    with pytest.raises(DomainError):
        mult_order(2, 1)


def test_mult_order_matches_naive_small():
    for n in range(2, 120):
        for a in range(2, n):
            if gcd(a, n) == 1:
                assert mult_order(a, n) == naive_order(a, n)


def test_lifting_exponent_examples():
    le = lifting_exponent(7, 3)
    assert (le.e, le.m) == (1, 1)
    assert le.predicted_order(3) == 9
    le2 = lifting_exponent(3, 2)
    assert (le2.e, le2.m) == (2, 3)
    le3 = lifting_exponent(2, 5)
    assert (le3.e, le3.m) == (4, 1)


def test_lifting_exponent_edge_cases():
    # a = 1 mod 4 vs 3 mod 4 both covered; q | a rejected
    assert lifting_exponent(5, 2).e == 1
    assert lifting_exponent(7, 2).e == 2
    with pytest.raises(DomainError):
        lifting_exponent(6, 3)
    with pytest.raises(DomainError):
        lifting_exponent(1, 3)


def test_group_order_formula_small():
    for q in (2, 3, 5):
        for a in (3, 7, 10, 22):
            if a % q == 0:
                continue
            le = lifting_exponent(a, q)
            for n in range(max(le.m, 1), le.m + 3):
                if q ** n < 3:
                    continue
                assert naive_order(a, q ** n) == le.predicted_order(n)


def test_cyclotomic_degree_examples():
    for k in range(1, 8):
        assert cyclotomic_degree_qp(2, 2 ** k) == 2 ** (k - 1)
    assert cyclotomic_degree_qp(3, 8) == 2
    assert cyclotomic_degree_qp(5, 12) == 2
    assert cyclotomic_degree_qp(7, 1) == 1


def test_cyclotomic_degree_divides_totient():
    for p in (2, 3, 5, 7):
        for b in range(1, 201):
            d = cyclotomic_degree_qp(p, b)
            if b >= 3:
                assert _totient(b) % d == 0
            else:
                assert d == 1


def test_galcor_examples():
    g = galcor_lower_bound(2, 2 ** 5, 2)
    assert g.degree == 2 ** 4 and g.m == 1 and g.bound == F(2 ** 5, 2)
    g2 = galcor_lower_bound(7, 4, 2)
    assert g2.degree == 2 and g2.m == 1 and g2.bound == 2
    g3 = galcor_lower_bound(5, 1, 2)
    assert g3.degree == 1 and g3.m == 0 and g3.bound == 1


def test_galcor_bound_never_exceeds_degree():
    for p in (2, 3, 5, 7, 11):
        for b in (1, 2, 4, 8, 16, 32, 64):
            g = galcor_lower_bound(p, b, 2)
            assert g.bound <= g.degree


def test_galcor_rejects_bad_b():
    with pytest.raises(DomainError):
        galcor_lower_bound(2, 6, 2)  # 3 does not divide D = 2


def test_padic_degree_bound_tight_example():
    rep = padic_degree_bound(PolyMap.from_text("X^2"), F(1, 8), 3)
    assert rep.bound == 4
    assert rep.snap_max_degree == 4  # tight
    assert rep.place.prime == 2
    assert rep.m_height_cap.contains(3)  # (D-1) h(1/8)/log 2 = 3 exactly


def test_padic_degree_bound_n1_rational_roots():
    rep = padic_degree_bound(PolyMap.from_text("X^2"), F(1, 8), 1)
    assert rep.bound == 1
    assert rep.snap_max_degree == 1


def test_padic_degree_bound_x2_plus_1():
    rep = padic_degree_bound(PolyMap.from_text("X^2+1"), F(1, 8), 2)
    assert rep.bound == 2
    assert rep.snap_max_degree >= 2
    assert rep.low_degree_count_bound(1) == 4  # d^2 D^(2m) with m = 1


def test_padic_bound_no_place():
    with pytest.raises(DomainError):
        padic_degree_bound(PolyMap.from_text("X^2+1"), 0, 2)


def test_padic_bound_below_observed_for_desk_cases():
    for alpha, n in ((F(1, 8), 1), (F(1, 8), 2), (F(1, 8), 3), (F(3, 8), 2), (F(1, 16), 3)):
        rep = padic_degree_bound(PolyMap.from_text("X^2"), alpha, n)
        assert rep.bound <= rep.snap_max_degree


def test_padic_bound_needs_strict_escape():
    # |1/4|_2 = delta_2 = 4 exactly: the strict hypothesis fails
    with pytest.raises(DomainError):
        padic_degree_bound(PolyMap.from_text("X^2"), F(1, 4), 2)


def test_galcor_degree_three():
    g = galcor_lower_bound(2, 9, 3)
    assert g.degree == 6  # order of 2 modulo 9
    assert g.m == 1 and g.bound == 3


def test_padic_degree_bound_cubic_tight():
    # roots of X^9 = (1/9)^9 are 9th roots of unity over 1/9; the bound
    # [Q_3(zeta_9):Q_3] = 6 matches the largest factor degree exactly
    rep = padic_degree_bound(PolyMap.from_text("X^3"), F(1, 9), 2)
    assert rep.place.prime == 3
    assert rep.bound == 6
    assert rep.snap_max_degree == 6
