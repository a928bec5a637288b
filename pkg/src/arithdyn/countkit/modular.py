"""Rigorous q-series evaluation of the elliptic modulus ratio ("lambda") and
the discriminant cusp form on the half-plane Im(tau) >= 1.

lambda is computed from its theta-quotient definition

    lambda(tau) = ( 2 sum_{n>=0} q^((2n+1)^2/4) )^4 / ( 1 + 2 sum_{n>=1} q^(n^2) )^4,

with q = exp(pi i tau); the fourth power turns the common factor q^(1/4) of
the numerator terms into a single exact factor 16 q, so only integer powers
of q are ever evaluated.  The discriminant uses
(2 pi)^12 q prod (1 - q^n)^24 with q = exp(2 pi i tau).  All truncation
tails are bounded by explicit geometric majorants (|q| <= e^-pi resp.
e^-2pi on the domain) and added to the enclosure radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, TailBoundError
from ..exactnum import (
    ComplexBall,
    RealBall,
    ball_cexp,
    ball_exp,
    ball_pi,
)


def _check_domain(tau: ComplexBall):
    if not (tau.im - tau.rad >= 1):
        raise DomainError("modular evaluation requires Im tau >= 1 (certified)")


def _nome(tau: ComplexBall, scale: int, prec: int) -> ComplexBall:
    """exp(scale * pi * i * tau) as a ball (scale = 1 or 2)."""
    pi_b = ball_pi(prec)
    re = pi_b * RealBall(tau.im, tau.rad) * (-scale)
    im = pi_b * RealBall(tau.re, tau.rad) * scale
    return ball_cexp(ComplexBall.from_real_pair(re, im), prec).round_to(prec + 32)


def _pow4(z: ComplexBall, work: int) -> ComplexBall:
    z2 = (z * z).round_to(work)
    return (z2 * z2).round_to(work)


@dataclass(frozen=True)
class ModularValue:
    value: ComplexBall
    terms: int
    tail_bound: Fraction  # majorant folded into the radius


def lambda_eval(tau: ComplexBall, N: int = 12, prec: int = 128,
                tol: Fraction | None = None) -> ModularValue:
    """Enclosure of lambda(tau) from N retained theta terms."""
    _check_domain(tau)
    q = _nome(tau, 1, prec)
    qa = q.abs_upper()
    if qa >= 1:
        raise DomainError("nome modulus not certified below 1")
    # A = sum_{n=0..N} q^(n^2+n), tail <= |q|^((N+1)(N+2)) / (1-|q|)
    # B = 1 + 2 sum_{n=1..N} q^(n^2), tail <= 2 |q|^((N+1)^2) / (1-|q|)
    work = prec + 32
    q2 = (q * q).round_to(work)
    a = ComplexBall.exact(1)  # n = 0 term
    cur = ComplexBall.exact(1)
    step = ComplexBall.exact(1)
    for n in range(1, N + 1):
        step = (step * q2).round_to(work)  # q^(2n)
        cur = (cur * step).round_to(work)  # q^(n^2+n)
        a = (a + cur).round_to(work)
    a_tail = qa ** ((N + 1) * (N + 2)) / (1 - qa)
    a = ComplexBall(a.re, a.im, a.rad + a_tail)
    b = ComplexBall.exact(1)
    cur = ComplexBall.exact(1)
    odd = q  # q^(2n-1), starting at n = 1
    for n in range(1, N + 1):
        cur = (cur * odd).round_to(work)  # q^(n^2) = q^((n-1)^2) * q^(2n-1)
        odd = (odd * q2).round_to(work)
        b = (b + 2 * cur).round_to(work)
    b_tail = 2 * qa ** ((N + 1) * (N + 1)) / (1 - qa)
    b = ComplexBall(b.re, b.im, b.rad + b_tail)
    value = (16 * q * _pow4(a, work) / _pow4(b, work)).round_to(work)
    tail = a_tail + b_tail
    if tol is not None and value.rad > tol:
        raise TailBoundError("lambda enclosure too wide; raise N or precision")
    return ModularValue(value, N, tail)


def delta_eval(tau: ComplexBall, N: int = 24, prec: int = 128,
               tol: Fraction | None = None) -> ModularValue:
    """Enclosure of the discriminant (2 pi)^12 q prod_{n>=1} (1-q^n)^24."""
    _check_domain(tau)
    q = _nome(tau, 2, prec)
    qa = q.abs_upper()
    if qa >= 1:
        raise DomainError("nome modulus not certified below 1")
    work = prec + 32
    prod = ComplexBall.exact(1)
    qn = ComplexBall.exact(1)
    for n in range(1, N + 1):
        qn = (qn * q).round_to(work)
        term = ComplexBall.exact(1) - qn
        t2 = (term * term).round_to(work)
        t4 = (t2 * t2).round_to(work)
        t8 = (t4 * t4).round_to(work)
        prod = (prod * t8 * t8 * t8).round_to(work)
    # |log prod_{n>N} (1-q^n)^24| <= 24 sum_{n>N} |q|^n/(1-|q|) <= t below
    t = 24 * qa ** (N + 1) / (1 - qa) ** 2
    growth = ball_exp(RealBall.exact(t), prec).hi - 1
    prod = ComplexBall(prod.re, prod.im, prod.rad + prod.abs_upper() * growth)
    two_pi = ball_pi(prec) * 2
    factor = two_pi ** 12
    value = (prod * q * ComplexBall.from_real_pair(factor, RealBall.exact(0))).round_to(work)
    if tol is not None and value.rad > tol:
        raise TailBoundError("delta enclosure too wide; raise N or precision")
    return ModularValue(value, N, t)


def modular_eval(which: str, tau: ComplexBall, N: int | None = None,
                 prec: int = 128, tol: Fraction | None = None) -> ModularValue:
    if which == "lambda":
        return lambda_eval(tau, N if N is not None else 12, prec, tol)
    if which == "delta":
        return delta_eval(tau, N if N is not None else 24, prec, tol)
    raise DomainError(f"unknown modular function {which!r}")


def lambda_disk_pullback(z, N: int = 12, prec: int = 128) -> RealBall:
    """lambda(2i/(1-z)) for rational z in (0,1): real, certified.

    The pulled-back point is purely imaginary with Im >= 2, where lambda is
    real (all q-powers are real); the complex enclosure is collapsed to a
    real interval.
    """
    z = Fraction(z)
    if not 0 < z < 1:
        raise DomainError("z must lie in (0,1)")
    t = 2 / (1 - z)
    mv = lambda_eval(ComplexBall(0, t), N, prec)
    return RealBall(mv.value.re, mv.value.rad)


def delta_disk_pullback(z, N: int = 24, prec: int = 128) -> RealBall:
    """The discriminant at 2i/(1-z) for rational z in (0,1): real, certified."""
    z = Fraction(z)
    if not 0 < z < 1:
        raise DomainError("z must lie in (0,1)")
    t = 2 / (1 - z)
    mv = delta_eval(ComplexBall(0, t), N, prec)
    return RealBall(mv.value.re, mv.value.rad)
