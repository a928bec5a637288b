import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arithdyn.exactnum import RatPoly
from arithdyn.polymap import PolyMap


def random_monic_map(rng: random.Random, max_degree: int = 3) -> PolyMap:
    """Monic map with rational coefficients in [-3, 3] (denominators <= 4)."""
    D = rng.choice(range(2, max_degree + 1))
    coeffs = []
    for _ in range(D):
        num = rng.randint(-12, 12)
        den = rng.choice((1, 2, 3, 4))
        c = Fraction(num, den)
        coeffs.append(max(Fraction(-3), min(Fraction(3), c)))
    return PolyMap(RatPoly(coeffs + [Fraction(1)]))


@pytest.fixture
def rng():
    return random.Random(20260809)


def pytest_runtest_logreport(report):
    # the acceptance suite prints one pass/fail line per criterion; PASS
    # lines come from the tests themselves, FAIL lines from this hook
    if report.when == "call" and report.failed and "test_acceptance" in report.nodeid:
        import re

        m = re.search(r"criterion_(\d+)", report.nodeid)
        if m:
            print(f"\nACCEPTANCE {m.group(1)}: FAIL")
