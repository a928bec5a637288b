"""arithdyn: exact heights, iteration statistics and counting toolkits."""

__version__ = "0.1.0"

from .polymap import PolyMap  # noqa: E402  (convenience re-exports)
from .exactnum import (  # noqa: F401
    ComplexBall,
    IntPoly,
    RatPoly,
    RealBall,
    TruncSeries,
    parse_poly,
)

__all__ = [
    "ComplexBall",
    "IntPoly",
    "PolyMap",
    "RatPoly",
    "RealBall",
    "TruncSeries",
    "__version__",
    "parse_poly",
]
