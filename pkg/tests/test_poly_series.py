from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithdyn.errors import DomainError
from arithdyn.exactnum import (
    IntPoly,
    RatPoly,
    TruncSeries,
    parse_poly,
    poly_from_json,
    series_compose_poly,
    series_compose_series,
    series_inverse,
    series_power,
)
from oracles import dict_series_pow

small = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def test_parse_and_str():
    p = parse_poly("X^2 - 3*X + 1/2")
    assert p.coeffs == (F(1, 2), F(-3), F(1))
    assert parse_poly("X^2") == RatPoly([0, 0, 1])
    assert parse_poly("-X") == RatPoly([0, -1])
    with pytest.raises(DomainError):
        parse_poly("X^")


def test_json_round_trip():
    p = RatPoly([F(1, 2), F(-3), F(1)])
    assert poly_from_json(p.to_json()) == p
    ip = IntPoly([2, 0, -1])
    assert ip.to_json() == ["2/1", "0/1", "-1/1"]


@given(a=st.lists(small, min_size=1, max_size=5), b=st.lists(small, min_size=1, max_size=5))
@settings(max_examples=50, deadline=None)
def test_divmod_identity(a, b):
    pa, pb = RatPoly(a), RatPoly(b)
    if pb.is_zero():
        return
    q, r = pa.divmod(pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


def test_compose():
    p = parse_poly("X^2+1")
    assert p.compose(p) == parse_poly("X^4 + 2*X^2 + 2")


def test_gcd_monic():
    a = parse_poly("X^2-1")
    b = parse_poly("X^2 - 2*X + 1")
    assert a.gcd(b) == parse_poly("X - 1")


def test_int_poly_primitive():
    c, prim = IntPoly([-6, 0, -12]).primitive()
    assert c == -6 and prim == IntPoly([1, 0, 2])


# --- series ---------------------------------------------------------------


def pad(coeffs, depth):
    return TruncSeries(1, list(coeffs) + [F(0)] * depth)


def test_identity_compose():
    s = TruncSeries.identity(-4)
    out = series_compose_poly(s, parse_poly("X^2+1"))
    assert out.coefficient(2) == 1 and out.coefficient(0) == 1
    assert all(out.coefficient(e) == 0 for e in range(-1, out.cert_exp - 1, -1) if e != 0)


def test_compose_direct_substitution():
    # (z + 1/2 z^-1) o X^2 = z^2 + 1/2 z^-2
    s = pad([F(1), F(0), F(1, 2)], 4)
    out = series_compose_poly(s, parse_poly("X^2"))
    assert out.coefficient(2) == 1
    assert out.coefficient(-2) == F(1, 2)
    assert out.coefficient(0) == 0
    # certified floor: (cert_s - 1) * D + 1
    assert out.cert_exp == (s.cert_exp - 1) * 2 + 1


def test_compose_phi_like_series():
    # s = z + (1/2) z^-1 + (1/8) z^-3 into X^2 + 1: constant 1, z^-2 term 1/2
    s = pad([F(1), F(0), F(1, 2), F(0), F(1, 8)], 4)
    out = series_compose_poly(s, parse_poly("X^2+1"))
    assert out.coefficient(0) == 1
    assert out.coefficient(-2) == F(1, 2)


def test_power_binomial():
    s = pad([F(1), F(0), F(1, 2)], 3)
    out = series_power(s, 2)
    assert out.coefficient(2) == 1
    assert out.coefficient(0) == 1
    assert out.coefficient(-2) == F(1, 4)


def test_power_identity():
    s = pad([F(1), F(3), F(1, 2)], 3)
    assert series_power(s, 1) == s


def test_power_of_plain_z():
    s = TruncSeries.identity(-3)
    cube = series_power(s, 3)
    assert cube.coefficient(3) == 1
    assert all(cube.coefficient(e) == 0 for e in range(2, cube.cert_exp - 1, -1))


def test_power_rejects_bad_lead():
    with pytest.raises(DomainError):
        series_power(TruncSeries(2, [F(1), F(0)]), 2)


def test_compose_rejects_nonmonic():
    s = TruncSeries.identity(-2)
    with pytest.raises(DomainError):
        series_compose_poly(s, parse_poly("2*X^2"))
    with pytest.raises(DomainError):
        series_compose_poly(s, parse_poly("X"))


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_power_matches_naive_dict_convolution(data):
    N = data.draw(st.integers(min_value=1, max_value=12))
    D = data.draw(st.integers(min_value=1, max_value=4))
    coeffs = [F(1)] + [data.draw(small) for _ in range(N)]
    s = TruncSeries(1, coeffs)
    out = series_power(s, D)
    naive = dict_series_pow(s.as_dict(), D)
    for e in range(out.lead_exp, out.cert_exp - 1, -1):
        assert out.coefficient(e) == naive.get(e, F(0))


def test_certified_tail_bookkeeping():
    # composing a short and a long version of the same series agrees on the
    # certified range of the short one, and only there is agreement guaranteed
    long = pad([F(1), F(0), F(1, 2), F(1, 3), F(1, 5), F(1, 7)], 6)
    short = long.truncate(-2)
    p = parse_poly("X^2+1")
    a = series_compose_poly(short, p)
    b = series_compose_poly(long, p)
    for e in range(a.lead_exp, a.cert_exp - 1, -1):
        assert a.coefficient(e) == b.coefficient(e)
    assert a.cert_exp == -5  # (-2 - 1) * 2 + 1
    assert b.cert_exp < a.cert_exp


def test_series_inverse_first_order():
    s = pad([F(1), F(0), F(1, 2)], 4)
    inv = series_inverse(s)
    assert inv.coefficient(1) == 1
    assert inv.coefficient(0) == 0
    assert inv.coefficient(-1) == F(-1, 2)
    # round trip on the common certified range
    rt = series_compose_series(inv, s)
    assert rt.coefficient(1) == 1
    for e in range(0, rt.cert_exp - 1, -1):
        assert rt.coefficient(e) == 0


def test_mul_certified_range_rule():
    a = pad([F(1), F(2)], 3)  # cert -3
    b = pad([F(1), F(0), F(5)], 1)  # cert -1
    prod = a * b
    assert prod.cert_exp == max(a.cert_exp + b.lead_exp, b.cert_exp + a.lead_exp)
