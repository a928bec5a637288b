"""Monic polynomial dynamical systems over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceGuardError
from .exactnum import RatPoly, parse_poly

DEFAULT_DEGREE_CAP = 4096


@dataclass(frozen=True)
class PolyMap:
    """A monic polynomial of degree D >= 2 viewed as z -> P(z)."""

    poly: RatPoly

    def __post_init__(self):
        if self.poly.is_zero() or self.poly.degree < 2:
            raise DomainError("map must have degree at least 2")
        if not self.poly.is_monic():
            raise DomainError(
                "map must be monic; conjugate by a suitable gamma first (PolyMap.conjugated)"
            )

    @classmethod
    def from_text(cls, text: str) -> "PolyMap":
        return cls(parse_poly(text))

    @classmethod
    def from_coeffs(cls, coeffs) -> "PolyMap":
        return cls(RatPoly(coeffs))

    @staticmethod
    def conjugated(poly: RatPoly, gamma) -> "PolyMap":
        """gamma^(-1) * poly(gamma X): makes lead 1 when gamma^(D-1) = lead."""
        gamma = Fraction(gamma)
        if gamma == 0:
            raise DomainError("gamma must be nonzero")
        scaled = RatPoly(c * gamma ** i for i, c in enumerate(poly.coeffs))
        return PolyMap(RatPoly(c / gamma for c in scaled.coeffs))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def coefficient(self, i: int) -> Fraction:
        """a_i = coefficient of X^(D-i), i = 1..D (a_0 = 1 is the lead)."""
        if not 0 <= i <= self.degree:
            raise DomainError(f"coefficient index {i} out of range")
        return Fraction(self.poly[self.degree - i])

    def lower_coefficients(self) -> list[Fraction]:
        """[a_1, ..., a_D]."""
        return [self.coefficient(i) for i in range(1, self.degree + 1)]

    def eval(self, x) -> Fraction:
        return self.poly.eval(Fraction(x))

    def iterate_poly(self, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> RatPoly:
        """Exact expanded n-th iterate (degree D**n); X for n = 0."""
        if n < 0:
            raise DomainError("iteration count must be >= 0")
        if self.degree ** n > degree_cap:
            raise ResourceGuardError(
                f"iterate degree {self.degree}^{n} exceeds cap {degree_cap}"
            )
        out = RatPoly([Fraction(0), Fraction(1)])
        for _ in range(n):
            out = self.poly.compose(out)
        return out

    def iterate_value(self, x, n: int, bit_cap: int = 8_000_000) -> Fraction:
        """P^n(x) by repeated evaluation, guarded by a value bit-size cap."""
        v = Fraction(x)
        for _ in range(n):
            v = self.poly.eval(v)
            if v.numerator.bit_length() + v.denominator.bit_length() > bit_cap:
                raise ResourceGuardError("orbit value size exceeds bit cap")
        return v

    def __str__(self):
        return str(self.poly)
