"""Certified complex root isolation for squarefree integer polynomials.

Strategy: simultaneous (Aberth-Ehrlich) iteration seeded on a perturbed
circle of Cauchy-bound radius gives fast approximations; exact rational
roots are snapped and deflated; the remaining approximations are polished
by Newton steps at increasing mpmath precision and then certified a
posteriori with exact rational arithmetic:

    every point z has a root of p within distance deg(p) * |p(z)/p'(z)|,

so if the n disks D(z_i, deg * |p(z_i)/p'(z_i)|) are pairwise disjoint each
one contains exactly one of the n roots.  All disk data (midpoints dyadic,
radii rational upper bounds) is exact, so the certificate is rigorous.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

import mpmath

from ..errors import CertificationError, DomainError
from .ball import ComplexBall, sqrt_up, _round_fraction
from .poly import IntPoly, RatPoly


def _cauchy_radius(p: RatPoly) -> float:
    lc = abs(p.lead)
    return 1.0 + max(abs(c / lc) for c in p.coeffs[:-1]) if p.degree >= 1 else 1.0


def _aberth_float(p: RatPoly, iters: int = 120) -> list[complex]:
    """Double-precision Aberth iteration; approximations only, no guarantees."""
    n = p.degree
    coeffs = [float(c) for c in p.coeffs]
    dcoeffs = [float(i * c) for i, c in enumerate(p.coeffs) if i >= 1]

    def ev(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    r = _cauchy_radius(p)
    zs = [
        r * cmath.exp(2j * cmath.pi * (k + 0.3711) / n) * (1 + 0.05 * ((k * 7 % 11) / 11))
        for k in range(n)
    ]
    for _ in range(iters):
        moved = 0.0
        for i in range(n):
            pz = ev(coeffs, zs[i])
            dz = ev(dcoeffs, zs[i])
            if dz == 0:
                zs[i] += 1e-6 + 1e-6j
                continue
            newton = pz / dz
            s = sum(1 / (zs[i] - zs[j]) for j in range(n) if j != i)
            denom = 1 - newton * s
            step = newton / denom if denom != 0 else newton
            zs[i] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14:
            break
    return zs


def _rational_root_candidates(z: complex, p: IntPoly) -> list[Fraction]:
    """Rational candidates near a numeric root (real roots have q | lead)."""
    x = z.real
    if not (abs(z.imag) <= 1e-7 * (1 + abs(x))) or x != x or abs(x) > 1e300:
        return []
    lead = abs(p.lead)
    out = [Fraction(x).limit_denominator(max(1, lead))]
    nearest_int = Fraction(round(x))
    if nearest_int != out[0]:
        out.append(nearest_int)
    return out


def _aberth_mp(p: IntPoly, prec: int, iters: int = 200) -> list[mpmath.mpc]:
    """Full Aberth pass at mpmath precision (fallback when float seeds fail)."""
    n = p.degree
    with mpmath.workprec(prec):
        cs = [mpmath.mpf(c) for c in p.coeffs]
        dcs = [mpmath.mpf(i * c) for i, c in enumerate(p.coeffs) if i >= 1]
        r = mpmath.mpf(1) + max(abs(mpmath.mpf(c)) / abs(mpmath.mpf(p.lead)) for c in p.coeffs[:-1])
        zs = [
            r * mpmath.exp(2j * mpmath.pi * (k + mpmath.mpf("0.3711")) / n) * (1 + mpmath.mpf(k % 7) / 100)
            for k in range(n)
        ]
        tol = mpmath.ldexp(1, -prec + 8)
        for _ in range(iters):
            moved = mpmath.mpf(0)
            for i in range(n):
                pz = _mp_ev(cs, zs[i])
                dz = _mp_ev(dcs, zs[i])
                if dz == 0:
                    zs[i] += tol
                    continue
                newton = pz / dz
                s = mpmath.fsum((1 / (zs[i] - zs[j]) for j in range(n) if j != i))
                denom = 1 - newton * s
                step = newton / denom if denom != 0 else newton
                zs[i] -= step
                moved = max(moved, abs(step))
            if moved < tol:
                break
        return [+z for z in zs]


def _mp_polish(p: IntPoly, z0: complex | mpmath.mpc, prec: int) -> mpmath.mpc:
    with mpmath.workprec(prec):
        z = mpmath.mpc(z0)
        cs = [mpmath.mpf(c) for c in p.coeffs]
        dcs = [mpmath.mpf(i * c) for i, c in enumerate(p.coeffs) if i >= 1]
        for _ in range(prec):
            pz = _mp_ev(cs, z)
            dz = _mp_ev(dcs, z)
            if dz == 0:
                break
            step = pz / dz
            z = z - step
            if abs(step) < mpmath.ldexp(1, -prec) * (1 + abs(z)):
                break
        return +z


def _mp_ev(cs, z):
    acc = mpmath.mpc(0)
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _mpc_to_exact(z: mpmath.mpc, prec: int) -> tuple[Fraction, Fraction]:
    re_t, im_t = z._mpc_
    re, _ = _round_fraction(_mpf_tuple_to_fraction(re_t), prec + 16)
    im, _ = _round_fraction(_mpf_tuple_to_fraction(im_t), prec + 16)
    return re, im


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, bc = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise CertificationError("non-finite approximation")
    v = Fraction(man) * Fraction(2) ** int(exp)
    return -v if sign else v


def _residual_radius(p: IntPoly, re: Fraction, im: Fraction) -> Fraction:
    """Exact upper bound for deg(p) * |p(z)/p'(z)| at the exact point z."""
    n = p.degree
    pre, pim = _eval_complex_exact(p, re, im)
    dre, dim = _eval_complex_exact(p.derivative(), re, im)
    num_sq = pre * pre + pim * pim
    den_sq = dre * dre + dim * dim
    if den_sq == 0:
        raise CertificationError("derivative vanishes at approximation")
    if num_sq == 0:
        return Fraction(0)
    return n * sqrt_up(Fraction(num_sq, den_sq), bits=96)


def _eval_complex_exact(p: IntPoly, re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def complex_roots_with_radii(p: IntPoly, precision: int = 64, max_precision: int = 4096) -> list[ComplexBall]:
    """deg(p) disjoint complex balls, each containing exactly one root of p.

    Requires p nonzero and squarefree.  Rational roots come back with radius
    0; the remaining radii are at most 2**-precision.  Raises
    CertificationError if the certificate cannot be established below
    ``max_precision`` working bits.
    """
    if p.is_zero():
        raise DomainError("zero polynomial")
    n = p.degree
    if n == 0:
        return []
    rp = p.to_rat()
    g = rp.gcd(rp.derivative())
    if g.degree > 0:
        raise DomainError("polynomial is not squarefree")

    # exact rational roots first (numeric detection + exact verification)
    try:
        approx = _aberth_float(rp)
    except (OverflowError, ZeroDivisionError):
        # coefficients beyond double range: the mpmath reseed path below
        # supplies proper seeds for every root of the remaining factor
        approx = []
    exact_roots: list[Fraction] = []
    remaining = p
    rem_approx = []
    for z in approx:
        hit = None
        for cand in _rational_root_candidates(z, remaining):
            if remaining.to_rat().eval(cand) == 0:
                hit = cand
                break
        if hit is not None:
            exact_roots.append(hit)
            num, den = hit.numerator, hit.denominator
            remaining = remaining.exact_div(IntPoly([-num, den]))
        else:
            rem_approx.append(z)

    balls = [ComplexBall.exact(rt) for rt in exact_roots]
    if remaining.degree >= 1:
        target = Fraction(1, 2 ** precision)
        work = max(64, 2 * precision + 32)
        seeds: list = rem_approx
        reseeded = False
        while True:
            ok = len(seeds) == remaining.degree
            cand_balls = []
            for z in seeds if ok else ():
                zz = _mp_polish(remaining, z, work)
                re, im = _mpc_to_exact(zz, work)
                try:
                    rad = _residual_radius(remaining, re, im)
                except CertificationError:
                    ok = False
                    break
                if rad > target:
                    ok = False
                    break
                cand_balls.append(ComplexBall(re, im, rad))
            if ok:
                all_balls = balls + cand_balls
                if len(all_balls) == n and _pairwise_disjoint(all_balls):
                    return all_balls
            if not reseeded:
                seeds = _aberth_mp(remaining, work)
                reseeded = True
            else:
                work *= 2
                seeds = _aberth_mp(remaining, work)
            if work > max_precision:
                raise CertificationError(
                    f"could not certify roots at {precision} bits (working precision cap {max_precision})"
                )
    if not _pairwise_disjoint(balls):
        raise CertificationError("duplicate rational roots; input not squarefree")
    return balls


def _pairwise_disjoint(balls: list[ComplexBall]) -> bool:
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            dx = balls[i].re - balls[j].re
            dy = balls[i].im - balls[j].im
            s = balls[i].rad + balls[j].rad
            if dx * dx + dy * dy <= s * s:
                return False
    return True
