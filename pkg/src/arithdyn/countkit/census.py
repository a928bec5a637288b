"""Bounded-height rational census with certified exclusion verdicts.

For each rational q of height <= H in (0,1) the evaluator produces a ball
around f(q).  Distinct rationals with denominator <= H are at least 1/H^2
apart, so a ball of radius below 1/(2 H^2) contains at most one of them;
the closest one is found exactly (Stern-Brocot via Fraction.limit_denominator
on the exact rational midpoint) and compared against the radius.  Absence
of rational values is certifiable; presence is only ever reported as a
candidate.  A value certified to be exactly 0 is excluded from candidacy
(it is recorded with candidate 0 and an exclusion flag, and not counted).

The scan domain is exactly the open interval (0,1).  Evaluators whose decay
region strictly contains (0,1) are only censused on (0,1); points outside
are out of scope for this tool.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import DomainError
from ..exactnum import RealBall

Evaluator = Callable[[Fraction, int], RealBall]


def enumerate_rationals(H) -> list[Fraction]:
    """All p/q in (0,1) with height max(p, q) = q <= H, by (denominator, numerator)."""
    H = Fraction(H)
    if H < 1:
        raise DomainError("H must be >= 1")
    top = math.floor(H)
    out = []
    for q in range(2, top + 1):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                out.append(Fraction(p, q))
    return out


@dataclass(frozen=True)
class CensusRecord:
    q: Fraction
    value: RealBall
    verdict: str  # certified-no-rational | candidate-rational | undecided-at-precision
    candidate: Fraction | None
    precision_used: int
    excluded_zero: bool = False


@dataclass(frozen=True)
class CensusResult:
    height: Fraction
    precision: int
    count: int  # candidate-rational records, certified zeros excluded
    records: tuple[CensusRecord, ...]

    def verdict_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.verdict] = out.get(r.verdict, 0) + 1
        return out


def _classify(q: Fraction, v: RealBall, H: Fraction, prec: int) -> CensusRecord | None:
    """One classification attempt; None means escalate precision."""
    top = math.floor(H)
    if v.rad == 0 and v.mid == 0:
        return CensusRecord(q, v, "candidate-rational", Fraction(0), prec, excluded_zero=True)
    cand = v.mid.limit_denominator(top)
    dist = abs(cand - v.mid)
    if dist > v.rad:
        return CensusRecord(q, v, "certified-no-rational", None, prec)
    if 2 * v.rad * top * top < 1:
        # at most one rational of denominator <= H fits in the ball
        if max(abs(cand.numerator), cand.denominator) <= H:
            return CensusRecord(q, v, "candidate-rational", cand, prec)
        return CensusRecord(q, v, "certified-no-rational", None, prec)
    return None


def census_records(evaluator: Evaluator, qs, H, precision: int = 128,
                   escalations: int = 1) -> list[CensusRecord]:
    """Classify f(q) for the given rationals (used for chunked parallel runs)."""
    H = Fraction(H)
    records = []
    for q in qs:
        prec = precision
        rec = None
        for _ in range(escalations + 1):
            v = evaluator(q, prec)
            rec = _classify(q, v, H, prec)
            if rec is not None:
                break
            prec *= 4
        if rec is None:
            rec = CensusRecord(q, evaluator(q, prec), "undecided-at-precision", None, prec)
        records.append(rec)
    return records


def census(evaluator: Evaluator, H, precision: int = 128,
           escalations: int = 1) -> CensusResult:
    """Classify f(q) for every height-bounded rational q in (0,1).

    Per-point undecided verdicts escalate the working precision (x4 each
    time, up to ``escalations`` retries) and are reported as
    undecided-at-precision if still unresolved, never dropped.
    """
    H = Fraction(H)
    records = census_records(evaluator, enumerate_rationals(H), H, precision, escalations)
    count = sum(
        1 for r in records if r.verdict == "candidate-rational" and not r.excluded_zero
    )
    return CensusResult(H, precision, count, tuple(records))


# -- evaluator registry (used by the CLI and the census tests) -------------


def make_square_evaluator() -> Evaluator:
    def ev(q: Fraction, prec: int) -> RealBall:
        return RealBall.exact(q * q)

    return ev


def make_const_evaluator(value) -> Evaluator:
    value = Fraction(value)

    def ev(q: Fraction, prec: int) -> RealBall:
        return RealBall.exact(value)

    return ev


def make_lambda_evaluator(N: int = 16) -> Evaluator:
    from .modular import lambda_disk_pullback

    def ev(q: Fraction, prec: int) -> RealBall:
        return lambda_disk_pullback(q, N, prec)

    return ev


def make_delta_evaluator(N: int = 24) -> Evaluator:
    from .modular import delta_disk_pullback

    def ev(q: Fraction, prec: int) -> RealBall:
        return delta_disk_pullback(q, N, prec)

    return ev


def make_fstar_evaluator(map_text: str, alpha, N: int = 16) -> Evaluator:
    """f(q) = fstar(mu(q)) with mu(q) = i (1+q)/(1-q); real on (0,1)."""
    from fractions import Fraction as F

    from ..boettcher import fstar_eval
    from ..exactnum import ComplexBall
    from ..polymap import PolyMap

    P = PolyMap.from_text(map_text)
    alpha = F(alpha)

    def ev(q: Fraction, prec: int) -> RealBall:
        t = (1 + q) / (1 - q)
        res = fstar_eval(P, alpha, ComplexBall(0, t), N=N, prec=prec)
        return RealBall(res.value.re, res.value.rad)

    return ev


EVALUATORS = {
    "square": lambda **kw: make_square_evaluator(),
    "const": lambda value=Fraction(1, 2), **kw: make_const_evaluator(value),
    "lambda": lambda N=16, **kw: make_lambda_evaluator(N),
    "delta": lambda N=24, **kw: make_delta_evaluator(N),
    "fstar": lambda map_text="X^2", alpha=Fraction(4), N=16, **kw: make_fstar_evaluator(map_text, alpha, N),
}
