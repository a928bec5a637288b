"""Dense univariate polynomials with exact coefficients, constant term first.

IntPoly holds arbitrary-precision integer coefficients, RatPoly holds
Fractions.  Both are immutable; the zero polynomial is the empty coefficient
tuple.  Serialization follows the project convention: JSON arrays of
"num/den" strings, constant term first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from ..errors import DomainError
from .ball import ComplexBall, RealBall, _as_complex, _as_real


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _BasePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(self._cast(c) for c in coeffs)

    @staticmethod
    def _cast(c):
        raise NotImplementedError

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._cast(0)

    def __add__(self, other):
        a, b = self.coeffs, self._coerce(other).coeffs
        n = max(len(a), len(b))
        return type(self)(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return type(self)()
        out = [self._cast(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative polynomial power")
        out = type(self)([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)([other])
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other)!r}")

    def shift(self, k: int):
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return type(self)((self._cast(0),) * k + self.coeffs)

    def derivative(self):
        return type(self)(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def eval(self, x):
        """Horner evaluation at an exact int/Fraction point."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """self(other(X)), exact."""
        other = self._coerce(other) if not isinstance(other, _BasePoly) else other
        out = type(other)()
        for c in reversed(self.coeffs):
            out = out * other + type(other)([c])
        return out

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append("X" if c == 1 else ("-X" if c == -1 else f"{c}*X"))
            else:
                parts.append(f"X^{i}" if c == 1 else (f"-X^{i}" if c == -1 else f"{c}*X^{i}"))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class IntPoly(_BasePoly):
    @staticmethod
    def _cast(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"non-integer coefficient {c} in IntPoly")
            return c.numerator
        return int(c)

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    def primitive(self) -> tuple[int, "IntPoly"]:
        """(content * sign, primitive part with positive leading coefficient)."""
        if not self.coeffs:
            return 0, IntPoly()
        c = self.content()
        if self.lead < 0:
            c = -c
        return c, IntPoly(x // c for x in self.coeffs)

    def to_rat(self) -> "RatPoly":
        return RatPoly(Fraction(c) for c in self.coeffs)

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def l2_norm_sq(self) -> int:
        return sum(c * c for c in self.coeffs)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def divides(self, other: "IntPoly") -> bool:
        q, r = other.to_rat().divmod(self.to_rat())
        return r.is_zero() and all(c.denominator == 1 for c in q.coeffs)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = self.to_rat().divmod(other.to_rat())
        if not r.is_zero() or any(c.denominator != 1 for c in q.coeffs):
            raise DomainError("exact_div: not divisible over Z")
        return IntPoly(c.numerator for c in q.coeffs)

    def to_json(self) -> list[str]:
        return [f"{c}/1" for c in self.coeffs]


class RatPoly(_BasePoly):
    @staticmethod
    def _cast(c):
        return Fraction(c)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise DomainError("zero polynomial cannot be made monic")
        lc = self.lead
        return RatPoly(c / lc for c in self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == 1

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lc = other.lead
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lc
            q[i - d] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] -= f * oc
        return RatPoly(q), RatPoly(rem[:d])

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd over Q (Euclid)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def clear_denominators(self) -> tuple[int, IntPoly]:
        """(scale, poly) with poly = scale * self, scale the lcm of denominators."""
        scale = 1
        for c in self.coeffs:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        return scale, IntPoly(c * scale for c in self.coeffs)

    def to_int_primitive(self) -> tuple[Fraction, IntPoly]:
        """(rational factor, primitive integer poly) with self = factor * poly."""
        if self.is_zero():
            return Fraction(0), IntPoly()
        scale, ip = self.clear_denominators()
        cont, prim = ip.primitive()
        return Fraction(cont, scale), prim

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def poly_from_json(arr) -> RatPoly:
    return RatPoly(Fraction(s) for s in arr)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*(?:\*)?\s*
        (?P<var>[Xx])?(?:\^(?P<exp>\d+))?$""",
    re.VERBOSE,
)


def parse_poly(text: str) -> RatPoly:
    """Parse strings like "X^2 - 3*X + 1/2" into a RatPoly.

    Integer and a/b rational coefficients only; no parentheses.
    """
    s = text.replace("-", "+-")
    terms = [t.strip() for t in s.split("+") if t.strip()]
    if not terms:
        raise DomainError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        body = term
        sign = 1
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:].strip()
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise DomainError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef = sign * Fraction(m.group("coef") or "1")
        if m.group("var"):
            exp = int(m.group("exp") or 1)
        else:
            if m.group("exp") is not None:
                raise DomainError(f"exponent without variable in {term!r}")
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    n = max(coeffs) + 1
    return RatPoly(coeffs.get(i, Fraction(0)) for i in range(n))


def ball_eval_poly(p: RatPoly | IntPoly, z: RealBall | ComplexBall, prec: int | None = None):
    """Horner evaluation; the result encloses p(w) for every w in z.

    Exact when z is exact; with ``prec`` set, intermediate values are rounded
    to that working precision (rounding error goes into the radius).
    """
    if isinstance(z, ComplexBall):
        acc = ComplexBall.exact(0)
        conv = _as_complex
    else:
        acc = RealBall.exact(0)
        conv = _as_real
    for c in reversed(p.coeffs):
        acc = acc * z + conv(Fraction(c))
        if prec is not None:
            acc = acc.round_to(prec)
    return acc
