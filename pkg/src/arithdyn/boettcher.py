"""Conjugacy-at-infinity series, its inverse, pullback evaluation, and the
nonarchimedean escape thresholds with the good-place search.

For a monic degree-D map P there is a unique formal series
phi(z) = z + b0 + b1/z + b2/z^2 + ... with phi(P(z)) = phi(z)^D; the
coefficients are solved degree by degree (b_k enters linearly with
multiplier D).  The same function is analytic for |z| beyond the escape
radius, and the telescoping product representation

    phi(z) = z * prod_k ( P^k(z) / P^(k-1)(z)^D )^(D^-k)

yields, for |z| >= rho >= 2R with R = 1 + sum|a_i|, a certified distortion
bound E(rho) with |phi(z)/z - 1| <= E.  Cauchy coefficient estimates then
give |b_k| <= E rho^(k+1), and on |w| >= 3 rho the compositional inverse is
analytic with |psi(w) - w| <= E/(1-E) |w|, giving |d_k| <= E/(1-E) (3rho)^(k+1).
These explicit constants drive all truncation-error bookkeeping below; pure
power maps have E = 0 and everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TailBoundError
from .exactnum import (
    ComplexBall,
    RealBall,
    TruncSeries,
    ball_cexp,
    ball_exp,
    ball_log,
    ball_pi,
    ball_root,
    series_compose_poly,
    series_inverse,
    series_power,
)
from .polymap import PolyMap

_ONE = Fraction(1)


@dataclass(frozen=True)
class BoettcherSeries:
    """Exact truncated conjugacy series phi for a monic map."""

    map: PolyMap
    phi: TruncSeries
    order: int  # coefficients b_0 .. b_order are certified

    def b(self, k: int) -> Fraction:
        """Coefficient of z^(-k) (k = 0 gives the constant term)."""
        return self.phi.coefficient(-k)


def boettcher_series(P: PolyMap, N: int) -> BoettcherSeries:
    """Solve phi(P(z)) = phi(z)^D for the exact coefficients b_0..b_N."""
    if N < 1:
        raise DomainError("series order must be >= 1")
    D = P.degree
    coeffs = [Fraction(1)] + [Fraction(0)] * (N + 1)  # z^1, z^0, ..., z^-N
    for k in range(N + 1):
        phi = TruncSeries(1, coeffs)
        lhs = series_compose_poly(phi, P.poly)
        rhs = series_power(phi, D)
        mismatch = lhs.coefficient(D - 1 - k) - rhs.coefficient(D - 1 - k)
        coeffs[k + 1] = mismatch / D
    phi = TruncSeries(1, coeffs)
    resid = series_compose_poly(phi, P.poly) - series_power(phi, D)
    floor = max(resid.cert_exp, D - 1 - N)
    for e in range(D, floor - 1, -1):
        if resid.coefficient(e) != 0:
            raise DomainError("functional-equation residual nonzero (solver bug)")
    return BoettcherSeries(P, phi, N)


def inverse_series(B: BoettcherSeries) -> TruncSeries:
    """Compositional inverse psi with psi(phi(z)) = z to the certified order."""
    return series_inverse(B.phi)


@dataclass(frozen=True)
class EscapeRadius:
    """R = 1 + sum |a_i|: |z| > R implies |P(z)| > |z|; safe = 2R is the
    certified series-convergence radius used by the evaluation bounds."""

    radius: Fraction
    safe: Fraction


def escape_domain_radius(P: PolyMap) -> EscapeRadius:
    r = _ONE + sum(abs(c) for c in P.lower_coefficients())
    return EscapeRadius(r, 2 * r)


def is_power_map(P: PolyMap) -> bool:
    return all(c == 0 for c in P.lower_coefficients())


def distortion_bound(P: PolyMap, rho: Fraction, prec: int = 96, terms: int = 8) -> Fraction:
    """Upper bound E with |phi(z)/z - 1| <= E for all |z| >= rho (rho >= 2R)."""
    R = escape_domain_radius(P).radius
    if rho < 2 * R:
        raise DomainError("distortion bound requires rho >= 2R")
    if R == 1:
        return Fraction(0)
    D = P.degree
    total = RealBall.exact(0)
    eps_next = None
    for k in range(1, terms + 2):
        den = max(rho, (rho / 2) ** (D ** (k - 1)))
        eps = (R - 1) / den
        if eps >= 1:
            raise DomainError("distortion series diverges at this radius")
        if k <= terms:
            term = -ball_log(RealBall.exact(1 - eps), prec)
            total = total + term * Fraction(1, D ** k)
        else:
            eps_next = eps
    tail = -ball_log(RealBall.exact(1 - eps_next), prec) * Fraction(1, D ** terms * (D - 1))
    e_ball = ball_exp(total + tail, prec) - 1
    return max(Fraction(0), e_ball.hi)


@dataclass(frozen=True)
class BoettcherFrame:
    """Everything needed to evaluate phi and psi with certified tails."""

    map: PolyMap
    series: BoettcherSeries
    psi: TruncSeries
    rho: Fraction  # working radius, >= 2R
    distortion: Fraction  # E(rho) upper bound; 0 for pure power maps


def boettcher_frame(P: PolyMap, N: int, prec: int = 96,
                    max_distortion: Fraction = Fraction(1, 8)) -> BoettcherFrame:
    B = boettcher_series(P, N)
    psi = series_inverse(B.phi)
    R = escape_domain_radius(P).radius
    rho = 2 * R
    if is_power_map(P):
        return BoettcherFrame(P, B, psi, rho, Fraction(0))
    while True:
        E = distortion_bound(P, rho, prec)
        if E <= max_distortion:
            return BoettcherFrame(P, B, psi, rho, E)
        rho *= 2


def _phi_tail(frame: BoettcherFrame, mod_lower: Fraction) -> Fraction:
    """Tail bound for phi evaluation truncated after b_N, |z| >= mod_lower >= 2 rho."""
    E, rho, N = frame.distortion, frame.rho, frame.series.order
    if E == 0:
        return Fraction(0)
    ratio = rho / mod_lower
    return E * rho * ratio ** (N + 1) / (1 - ratio)


def _psi_tail(frame: BoettcherFrame, mod_lower: Fraction) -> Fraction:
    """Tail bound for psi evaluation truncated after d_N, |w| >= mod_lower >= 6 rho."""
    E, N = frame.distortion, frame.series.order
    if E == 0:
        return Fraction(0)
    three_rho = 3 * frame.rho
    ratio = three_rho / mod_lower
    return (E / (1 - E)) * three_rho * ratio ** (N + 1) / (1 - ratio)


def phi_eval(frame: BoettcherFrame, alpha) -> ComplexBall:
    """Certified phi(alpha) for an exact rational alpha with |alpha| >= 2 rho
    (any nonzero alpha for a pure power map)."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise DomainError("phi is not defined at 0")
    if frame.distortion == 0:
        # pure power map: phi is exactly the identity
        return ComplexBall.exact(alpha)
    if abs(alpha) < 2 * frame.rho:
        raise DomainError(f"phi evaluation requires |alpha| >= {2 * frame.rho}")
    val = alpha + _horner_tail(frame.series.phi, alpha, frame.series.order)
    return ComplexBall(val, 0, _phi_tail(frame, abs(alpha)))


def _horner_tail(series: TruncSeries, x: Fraction, N: int) -> Fraction:
    """sum_{k=0..N} c_{-k} x^(-k), exact."""
    inv = 1 / x
    acc = Fraction(0)
    for k in range(N, -1, -1):
        acc = acc * inv + series.coefficient(-k)
    return acc


def psi_eval(frame: BoettcherFrame, w: ComplexBall, tol: Fraction | None = None,
             prec: int = 128) -> ComplexBall:
    """Certified psi(w) for a complex ball with |w| >= 6 rho (any w != 0 for
    pure power maps, where psi is the identity)."""
    if frame.distortion == 0:
        return w
    lo = w.abs_lower()
    if lo < 6 * frame.rho:
        raise DomainError(f"psi evaluation requires |w| >= {6 * frame.rho}")
    work = prec + 32
    inv = w.inverse().round_to(work)
    acc = ComplexBall.exact(0)
    for k in range(frame.series.order, -1, -1):
        acc = (acc * inv + ComplexBall.exact(frame.psi.coefficient(-k))).round_to(work)
    tail = _psi_tail(frame, lo)
    if tol is not None and tail > tol:
        raise TailBoundError(
            f"psi truncation tail {float(tail):.3g} above tolerance; raise the series order"
        )
    val = w + acc
    return ComplexBall(val.re, val.im, val.rad + tail)


@dataclass(frozen=True)
class FStarResult:
    value: ComplexBall
    phi_tail: Fraction
    psi_tail: Fraction
    rho: Fraction
    distortion: Fraction


def fstar_eval(P: PolyMap, alpha, tau: ComplexBall, N: int = 16,
               prec: int = 128, tol: Fraction | None = None) -> FStarResult:
    """Certified value of the escape-parametrized root function

        f(tau) = 1 / psi( phi(alpha) * exp(-2 pi i (tau - i/24)) )

    on the strip Im tau >= 1/24, |Re tau| <= 1/2.  The reciprocal of f at
    tau = k/D^n + i/24 runs through the solutions of P^n(X) = P^n(alpha).
    """
    alpha = Fraction(alpha)
    if not (tau.im - tau.rad >= Fraction(1, 24)):
        raise DomainError("tau must satisfy Im tau >= 1/24 (certified)")
    if not (abs(tau.re) + tau.rad <= Fraction(1, 2)):
        raise DomainError("tau must satisfy |Re tau| <= 1/2 (certified)")
    frame = boettcher_frame(P, N, prec)
    if frame.distortion != 0 and abs(alpha) < 7 * frame.rho:
        raise DomainError(
            f"evaluation domain requires |alpha| >= {7 * frame.rho} for this map"
        )
    phi_a = phi_eval(frame, alpha).round_to(prec + 32)
    phi_tail = phi_a.rad
    # exp(-2 pi i (tau - i/24)) = exp( (2 pi (Im tau - 1/24)) - 2 pi i Re tau )
    pi_b = ball_pi(prec)
    re_part = pi_b * (RealBall(tau.im, tau.rad) * 2 - Fraction(1, 12))
    im_part = pi_b * RealBall(tau.re, tau.rad) * (-2)
    factor = ball_cexp(ComplexBall.from_real_pair(re_part, im_part), prec)
    w = (phi_a * factor).round_to(prec + 32)
    psi_w = psi_eval(frame, w, tol, prec)
    psi_tail = _psi_tail(frame, w.abs_lower()) if frame.distortion != 0 else Fraction(0)
    value = psi_w.inverse()
    if tol is not None and value.rad > tol:
        raise TailBoundError(
            f"truncation radius {float(value.rad):.3g} above tolerance; raise N or precision"
        )
    return FStarResult(value, phi_tail, psi_tail, frame.rho, frame.distortion)


def padic_abs(x: Fraction, p: int) -> Fraction:
    """|x|_p with the normalization |p|_p = 1/p."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return Fraction(1, p ** v) if v >= 0 else Fraction(p ** (-v))


@dataclass(frozen=True)
class DeltaV:
    """Escape threshold at one place.

    For p not dividing D the threshold is rational and stored in ``exact``.
    For p | D it involves p^(1/(p-1)); its (p-1)-th power is rational and is
    stored in ``power`` (with ``power_exponent`` = p-1), so comparisons stay
    exact.  The archimedean surrogate (prime None) stores the escape radius.
    """

    prime: int | None
    exact: Fraction | None = None
    power: Fraction | None = None
    power_exponent: int | None = None

    def is_trivial(self) -> bool:
        if self.exact is not None:
            return self.exact == 1
        return self.power == 1

    def exceeded_by(self, x: Fraction) -> bool:
        """Exact test |x|_v > delta_v."""
        if self.prime is None:
            return abs(Fraction(x)) > self.exact
        ax = padic_abs(x, self.prime)
        if self.exact is not None:
            return ax > self.exact
        return ax ** self.power_exponent > self.power

    def value_ball(self, prec: int = 96) -> RealBall:
        if self.exact is not None:
            return RealBall.exact(self.exact)
        return ball_root(RealBall.exact(self.power), self.power_exponent, prec)

    def log_free_ball(self, prec: int = 96) -> RealBall:
        return self.value_ball(prec)

    def describe(self) -> str:
        if self.prime is None:
            return f"arch:{self.exact}"
        if self.exact is not None:
            return f"p={self.prime}:{self.exact}"
        return f"p={self.prime}:({self.power})^(1/{self.power_exponent})"


def delta_v(P: PolyMap, p: int) -> DeltaV:
    """Exact escape threshold at the prime p (both divisibility branches)."""
    if p < 2:
        raise DomainError("p must be a prime")
    D = P.degree
    coeff_max = max([_ONE] + [padic_abs(c, p) for c in P.lower_coefficients() if c != 0])
    if D % p != 0:
        return DeltaV(p, exact=coeff_max)
    abs_D = padic_abs(Fraction(D), p)
    power = coeff_max ** (p - 1) * p / abs_D ** (p - 1)
    if p == 2:
        return DeltaV(p, exact=power, power=power, power_exponent=1)
    return DeltaV(p, power=power, power_exponent=p - 1)


def delta_exception_set(P: PolyMap) -> list[int]:
    """Primes where delta_v can exceed 1: divisors of D and of coefficient
    denominators."""
    primes = set(_prime_divisors(P.degree))
    for c in P.lower_coefficients():
        primes.update(_prime_divisors(c.denominator))
    return sorted(primes)


def _prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PlaceReport:
    """A place where |alpha|_v certifiably exceeds the escape threshold."""

    prime: int | None  # None = archimedean
    abs_value: Fraction
    delta: DeltaV
    margin: RealBall  # |alpha|_v / delta_v, > 1

    def describe(self) -> str:
        where = "arch" if self.prime is None else f"p={self.prime}"
        return f"{where} |alpha|_v={self.abs_value} > {self.delta.describe()}"


def good_place(P: PolyMap, alpha) -> PlaceReport | None:
    """First place with |alpha|_v > delta_v: primes dividing denominator(alpha)
    in increasing order, then the archimedean escape-radius surrogate."""
    alpha = Fraction(alpha)
    if alpha == 0:
        return None
    for p in _prime_divisors(alpha.denominator):
        dv = delta_v(P, p)
        if dv.exceeded_by(alpha):
            av = padic_abs(alpha, p)
            margin = RealBall.exact(av) / dv.value_ball()
            return PlaceReport(p, av, dv, margin)
    arch = escape_domain_radius(P).radius
    if abs(alpha) > arch:
        dv = DeltaV(None, exact=arch)
        return PlaceReport(None, abs(alpha), dv, RealBall.exact(abs(alpha) / arch))
    return None
