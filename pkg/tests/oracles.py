"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's own algorithms: factor search by
exhaustive coefficient boxes with Mignotte-style bounds, naive multiplicative
orders by repeated multiplication, naive series multiplication on full
coefficient dicts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from arithdyn.exactnum import IntPoly


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _mignotte_box(f: IntPoly, deg_g: int) -> int:
    l2 = math.isqrt(f.l2_norm_sq()) + 1
    return (1 << deg_g) * l2


def _try_divide(f: IntPoly, g: IntPoly) -> IntPoly | None:
    q, r = f.to_rat().divmod(g.to_rat())
    if not r.is_zero() or any(c.denominator != 1 for c in q.coeffs):
        return None
    return IntPoly(c.numerator for c in q.coeffs)


def _eval_filter(gv: int, fv: int) -> bool:
    """g | f forces g(t) | f(t); inconclusive (True) when f(t) == 0."""
    if fv == 0:
        return True
    return gv != 0 and fv % gv == 0


def find_factor_upto(f: IntPoly, max_deg: int) -> IntPoly | None:
    """Smallest-degree nontrivial factor of degree <= max_deg by box search."""
    n = f.degree
    f1 = f.eval(1)
    fm1 = f.eval(-1)
    for dg in range(1, min(max_deg, n - 1) + 1):
        lc_opts = _divisors(f.lead)
        if f[0] == 0:
            # X divides
            if dg == 1:
                return IntPoly([0, 1])
            continue
        c0_opts = [d for d in _divisors(f[0])]
        c0_signed = [s * d for d in c0_opts for s in (1, -1)]
        bound = _mignotte_box(f, dg)
        mid_range = range(-bound, bound + 1)
        for lc in lc_opts:
            for c0 in c0_signed:
                for mids in product(mid_range, repeat=dg - 1):
                    g = IntPoly([c0, *mids, lc])
                    if g.degree != dg:
                        continue
                    if not _eval_filter(g.eval(1), f1):
                        continue
                    if not _eval_filter(g.eval(-1), fm1):
                        continue
                    if _try_divide(f, g) is not None:
                        return g
    return None


def exhaustive_factorization(f: IntPoly) -> list[IntPoly]:
    """Full factorization by repeated ascending-degree box search.

    Complete: a reducible polynomial always has a factor of degree at most
    half its own, and the box bound covers every possible factor
    coefficient, so an exhausted search certifies irreducibility.
    """
    _, f = f.primitive()
    out = []
    while f.degree > 0:
        g = find_factor_upto(f, f.degree // 2)
        if g is None:
            out.append(f.primitive()[1])
            break
        _, gp = g.primitive()
        out.append(gp)
        f = f.exact_div(gp)
    return sorted(out, key=lambda p: (p.degree, p.coeffs))


def naive_order(a: int, n: int) -> int:
    """Multiplicative order by repeated multiplication."""
    a %= n
    x = a
    f = 1
    while x != 1:
        x = x * a % n
        f += 1
        if f > n:
            raise AssertionError("order exceeded modulus (non-unit?)")
    return f


def dict_series_mul(d1: dict[int, Fraction], d2: dict[int, Fraction]) -> dict[int, Fraction]:
    """Full (untruncated) Laurent convolution on coefficient dicts."""
    out: dict[int, Fraction] = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def dict_series_pow(d: dict[int, Fraction], k: int) -> dict[int, Fraction]:
    out = {0: Fraction(1)}
    for _ in range(k):
        out = dict_series_mul(out, d)
    return out
