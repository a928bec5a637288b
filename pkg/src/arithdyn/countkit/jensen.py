"""Zero-count bound for analytic functions on nested disks."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError
from ..exactnum import RealBall, ball_log


def jensen_zero_bound(M, g0_modulus, r, R, prec: int = 96) -> int:
    """Upper bound (log M - log |g(0)|) / log(R/r) on zeros in |z| <= r.

    Evaluated in ball arithmetic and rounded outward (up) before taking the
    floor, so the returned integer always dominates the displayed quantity.
    """
    M, g0, r, R = Fraction(M), Fraction(g0_modulus), Fraction(r), Fraction(R)
    if not (R > r > 0):
        raise DomainError("need R > r > 0")
    if g0 <= 0:
        raise DomainError("need |g(0)| > 0")
    if M < g0:
        raise DomainError("need M >= |g(0)|")
    if M == g0:
        return 0
    num = ball_log(RealBall.exact(M), prec) - ball_log(RealBall.exact(g0), prec)
    den = ball_log(RealBall.exact(R / r), prec)
    return math.floor((num / den).hi)
