"""Dense polynomial arithmetic over F_p and Z/m (lists, constant term first).

Coefficients are plain ints reduced into [0, m).  Only what the Zassenhaus
driver needs: ring ops, division by a monic polynomial, gcd/gcdex over a
prime field, powmod, distinct-degree and equal-degree splitting.
"""

from __future__ import annotations

import random

from ..errors import DomainError


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def from_int_poly(coeffs, m: int) -> list[int]:
    return trim([c % m for c in coeffs])


def add(f, g, m):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m for i in range(n)])


def sub(f, g, m):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m for i in range(n)])


def mul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % m for c in out])


def scalar(f, c, m):
    c %= m
    return trim([a * c % m for a in f])


def divmod_general(f, g, m):
    """Division when lc(g) is invertible mod m (always true for monic g)."""
    if not g:
        raise DomainError("division by zero polynomial")
    inv = pow(g[-1], -1, m)
    rem = [c % m for c in f]
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], trim(rem)
    q = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] % m
        if c == 0:
            continue
        fac = c * inv % m
        q[i - dg] = fac
        for j, gc in enumerate(g):
            rem[i - dg + j] = (rem[i - dg + j] - fac * gc) % m
    return trim(q), trim(rem)


def rem_monic(f, g, m):
    return divmod_general(f, g, m)[1]


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gcd(f, g, p):
    a, b = [c % p for c in f], [c % p for c in g]
    trim(a), trim(b)
    while b:
        a, b = b, divmod_general(a, b, p)[1]
    return monic(a, p)


def gcdex(f, g, p):
    """(s, t, h) with s*f + t*g = h = monic gcd(f, g) over F_p."""
    r0, r1 = [c % p for c in f], [c % p for c in g]
    trim(r0), trim(r1)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_general(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scalar(s0, inv, p), scalar(t0, inv, p), monic(r0, p)


def deriv(f, m):
    return trim([i * c % m for i, c in enumerate(f) if i >= 1])


def pow_mod(f, e: int, g, m):
    """f**e mod g (g monic) over Z/m."""
    out = [1]
    base = rem_monic(f, g, m)
    while e:
        if e & 1:
            out = rem_monic(mul(out, base, m), g, m)
        base = rem_monic(mul(base, base, m), g, m)
        e >>= 1
    return out


def is_squarefree(f, p) -> bool:
    return len(gcd(f, deriv(f, p), p)) == 1


def distinct_degree(f, p):
    """[(product_of_irreducibles_of_degree_d, d)] for monic squarefree f."""
    out = []
    h = [0, 1]  # x
    g = list(f)
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, p, g, p)
        gd = gcd(sub(h, [0, 1], p), g, p)
        if len(gd) > 1:
            out.append((gd, d))
            g = divmod_general(g, gd, p)[0]
            h = rem_monic(h, g, p)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def equal_degree_split(f, d: int, p, rng: random.Random):
    """Cantor-Zassenhaus split of a monic squarefree product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)] + [1]
        r = trim(r)
        if len(r) <= 1:
            continue
        g = gcd(r, f, p)
        if 1 < len(g) < len(f):
            pass
        elif p == 2:
            t = list(r)
            acc = list(r)
            for _ in range(d - 1):
                acc = pow_mod(acc, 2, f, p)
                t = add(t, acc, p)
            g = gcd(t, f, p)
        else:
            e = (p ** d - 1) // 2
            t = sub(pow_mod(r, e, f, p), [1], p)
            g = gcd(t, f, p)
        if 1 < len(g) < len(f):
            q = divmod_general(f, g, p)[0]
            return equal_degree_split(g, d, p, rng) + equal_degree_split(q, d, p, rng)


def factor_squarefree_monic(f, p, rng: random.Random):
    """Monic irreducible factors of a monic squarefree f over F_p, sorted."""
    out = []
    for prod, d in distinct_degree(f, p):
        out.extend(equal_degree_split(prod, d, p, rng))
    out.sort(key=lambda g: (len(g), g))
    return out
