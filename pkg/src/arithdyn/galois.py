"""Multiplicative orders, lifting exponents, exact cyclotomic degrees over
the p-adic field, and the resulting degree lower bounds for iterate roots.

The order of a modulo q^n stabilizes to e * q^(n-m) for n >= m, where e is
the order of a modulo q (modulo 4 when q = 2) and m is maximal with
a^e = 1 mod q^m.  The degree of the b-th cyclotomic extension of Q_p splits
as an unramified part (the order of p modulo the prime-to-p part of b) times
the totally ramified part p^(k-1)(p-1) from the p-power part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactnum import RealBall, ball_log
from .polymap import DEFAULT_DEGREE_CAP, PolyMap


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division + Pollard rho (deterministic)."""
    if n <= 0:
        raise DomainError("factorization needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):  # deterministic < 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise DomainError(f"failed to split {n}")


def _carmichael(n: int) -> int:
    lam = 1
    for p, k in _factorize(n).items():
        if p == 2 and k >= 3:
            v = 2 ** (k - 2)
        else:
            v = (p - 1) * p ** (k - 1)
        lam = lam * v // math.gcd(lam, v)
    return lam


def mult_order(a: int, n: int) -> int:
    """Least f >= 1 with a^f = 1 mod n, via the group exponent and divisor descent."""
    if n < 2:
        raise DomainError("modulus must be >= 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise DomainError(f"{a} is not invertible modulo {n}")
    f = _carmichael(n)
    for p in sorted(_factorize(f)):
        while f % p == 0 and pow(a, f // p, n) == 1:
            f //= p
    return f


@dataclass(frozen=True)
class LiftingExponent:
    """(e, m) data governing orders modulo prime powers.

    e is the order of a modulo q (modulo 4 when q = 2); m is maximal with
    a^e = 1 mod q^m.  For n >= m the order of a modulo q^n is e * q^(n-m).
    """

    a: int
    q: int
    e: int
    m: int

    def predicted_order(self, n: int) -> int:
        if n < self.m:
            raise DomainError(f"prediction requires n >= m = {self.m}")
        return self.e * self.q ** (n - self.m)


def lifting_exponent(a: int, q: int) -> LiftingExponent:
    """Compute (e, m); the stabilized-order prediction is self-checked for
    n up to m + 3 against direct order computation."""
    if a <= 1:
        raise DomainError("a must exceed 1")
    if not _is_prime(q):
        raise DomainError(f"{q} is not prime")
    if a % q == 0:
        raise DomainError(f"{q} divides {a}")
    if q == 2:
        e = 1 if a % 4 == 1 else 2
    else:
        e = mult_order(a, q)
    # m = q-valuation of a^e - 1, probed modularly (a^e itself can be huge)
    m = 1
    while pow(a, e, q ** (m + 1)) == 1:
        m += 1
    le = LiftingExponent(a, q, e, m)
    for n in range(le.m, le.m + 4):
        if q ** n >= 2 and mult_order(a, q ** n) != le.predicted_order(n):
            raise DomainError("lifting-exponent self-check failed")
    return le


def cyclotomic_degree_qp(p: int, b: int) -> int:
    """Exact degree of the b-th cyclotomic extension of the p-adic field.

    With b = p^k * b0 (p not dividing b0): the unramified part has degree
    ord(p mod b0) (1 when b0 <= 2), the ramified part p^(k-1)(p-1).
    """
    if b < 1:
        raise DomainError("b must be >= 1")
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    k = 0
    b0 = b
    while b0 % p == 0:
        b0 //= p
        k += 1
    unram = 1 if b0 <= 2 else mult_order(p, b0)
    ram = 1 if k == 0 else p ** (k - 1) * (p - 1)
    return unram * ram


@dataclass(frozen=True)
class GalcorBound:
    """Lower bound b * D^(-m) on the cyclotomic p-adic degree."""

    degree: int  # exact cyclotomic degree
    m: int  # minimal m making degree >= b * D^(-m)
    bound: Fraction
    m_cap: RealBall  # (D-1) log(p) / log(2)


def galcor_lower_bound(p: int, b: int, D: int, prec: int = 64) -> GalcorBound:
    """Minimal m with [cyclotomic degree] >= b * D^(-m), for b | D^infinity."""
    if D < 2:
        raise DomainError("D must be >= 2")
    for q in _factorize(b) if b > 1 else {}:
        if D % q != 0:
            raise DomainError(f"prime {q} of b does not divide D = {D}")
    deg = cyclotomic_degree_qp(p, b)
    m = 0
    while deg * D ** m < b:
        m += 1
    cap = (D - 1) * ball_log(RealBall.exact(p), prec) / ball_log(RealBall.exact(2), prec)
    return GalcorBound(deg, m, Fraction(b, D ** m), cap)


@dataclass(frozen=True)
class PadicBoundReport:
    """Certified degree lower bound for solutions of P^n(X) = P^n(alpha)."""

    place: object  # PlaceReport (nonarchimedean)
    n: int
    bound: int  # exact cyclotomic degree of the D^n-th roots of unity over Q_p
    cap_form: Fraction  # the coarser D^(n - m_uniform) shape, for comparison
    m_uniform: int  # valid for every divisor b of D^n
    m_height_cap: RealBall  # (D-1) h(alpha) / log 2
    count_coefficient: int  # D^(2 m_uniform): low-degree count bound d -> d^2 * this
    snap_max_degree: int | None  # cross-check when factorization is affordable

    def low_degree_count_bound(self, d: int) -> int:
        return d * d * self.count_coefficient


def padic_degree_bound(P: PolyMap, alpha, n: int, prec: int = 64,
                       degree_cap: int = DEFAULT_DEGREE_CAP,
                       cross_check: bool = True, seed: int = 0) -> PadicBoundReport:
    """Degree lower bound via the cyclotomic structure at a good prime.

    Uses the exact cyclotomic degree of the D^n-th roots of unity over Q_p
    (sharper than the D^(n-m) shape, which is also reported).  Requires a
    nonarchimedean place with |alpha|_v > delta_v.
    """
    from .boettcher import good_place
    from .heights import height_rational

    alpha = Fraction(alpha)
    place = good_place(P, alpha)
    if place is None or place.prime is None:
        raise DomainError("no good nonarchimedean place for this (map, alpha)")
    p = place.prime
    D = P.degree
    bound = cyclotomic_degree_qp(p, D ** n)
    m0 = 0
    for q in _factorize(D):
        if q != p:
            m0 = max(m0, lifting_exponent(p, q).m)
    m_uniform = m0 + (1 if D % p == 0 else 0)
    h_log = height_rational(alpha, prec).log
    cap = (D - 1) * h_log / ball_log(RealBall.exact(2), prec)
    snap_max = None
    if cross_check and D ** n <= degree_cap:
        from .dynamics import snap_degree_multiset

        snap_max = snap_degree_multiset(P, alpha, n, degree_cap, seed).max_degree
        if snap_max < bound:
            raise DomainError(
                f"certified bound {bound} exceeds observed max degree {snap_max} (bug)"
            )
    return PadicBoundReport(
        place=place,
        n=n,
        bound=bound,
        cap_form=Fraction(D ** n, D ** min(m_uniform, n)),
        m_uniform=m_uniform,
        m_height_cap=cap,
        count_coefficient=D ** (2 * m_uniform),
        snap_max_degree=snap_max,
    )
