import math
from fractions import Fraction as F

import pytest

from arithdyn.countkit import delta_eval, lambda_eval, modular_eval
from arithdyn.countkit.modular import delta_disk_pullback, lambda_disk_pullback
from arithdyn.errors import DomainError
from arithdyn.exactnum import ComplexBall, ball_exp, ball_pi


def test_lambda_leading_term_at_3i():
    mv = lambda_eval(ComplexBall(0, 3), N=10, prec=128)
    q = math.exp(-3 * math.pi)
    assert 15 * q <= float(mv.value.re) <= 17 * q
    assert abs(float(mv.value.im)) <= float(mv.value.rad)


def test_lambda_at_i_contains_half():
    mv = lambda_eval(ComplexBall(0, 1), N=14, prec=160)
    assert mv.value.contains(F(1, 2), 0)
    assert mv.value.rad < F(1, 10 ** 30)


def test_delta_product_near_one():
    # delta(4i) / ((2 pi)^12 q) = prod (1-q^n)^24 within 1 +/- 1e-9
    prec = 128
    mv = delta_eval(ComplexBall(0, 4), N=10, prec=prec)
    two_pi = ball_pi(prec) * 2
    # q = exp(-8 pi), real positive
    q = ball_exp(two_pi * (-4), prec)
    denom = (two_pi ** 12) * q
    ratio_lo = mv.value.abs_lower() / denom.hi
    ratio_hi = mv.value.abs_upper() / denom.lo
    assert ratio_lo >= 1 - F(1, 10 ** 9)
    assert ratio_hi <= 1 + F(1, 10 ** 9)


def test_modular_domain_check():
    with pytest.raises(DomainError):
        lambda_eval(ComplexBall(0, F(1, 2)), N=8)
    with pytest.raises(DomainError):
        modular_eval("zeta", ComplexBall(0, 2))


def test_nesting_under_more_terms():
    tau = ComplexBall(F(1, 3), F(3, 2))
    coarse = lambda_eval(tau, N=6, prec=128).value
    fine = lambda_eval(tau, N=12, prec=128).value
    # doubling N never moves the enclosure outside the previous ball
    d2 = (fine.re - coarse.re) ** 2 + (fine.im - coarse.im) ** 2
    assert d2 <= (coarse.rad + fine.rad) ** 2
    assert fine.rad <= coarse.rad


def test_disk_pullbacks_match_complex_path():
    q = F(1, 3)
    real_v = lambda_disk_pullback(q, N=10, prec=96)
    t = 2 / (1 - q)
    complex_v = lambda_eval(ComplexBall(0, t), N=10, prec=96).value
    assert abs(real_v.mid - complex_v.re) <= real_v.rad + complex_v.rad
    dv = delta_disk_pullback(q, N=10, prec=96)
    assert dv.mid > 0


def test_delta_eval_positive_on_imaginary_axis():
    mv = delta_eval(ComplexBall(0, 2), N=16, prec=128)
    assert mv.value.abs_lower() > 0
    assert abs(float(mv.value.im)) <= float(mv.value.rad)
