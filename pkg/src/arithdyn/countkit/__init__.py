"""Counting toolkit: coverings, zero bounds, interpolation thresholds,
extremal partition combinatorics, bound-shape evaluators, rigorous modular
values, and the bounded-height rational census."""

from .census import (
    CensusRecord,
    CensusResult,
    EVALUATORS,
    census,
    census_records,
    enumerate_rationals,
)
from .cover import cover_count_bound_holds, covers_sample, disk_cover
from .jensen import jensen_zero_bound
from .masser import BivarIntPoly, masser_T_threshold, vanishing_polynomial
from .modular import (
    ModularValue,
    delta_disk_pullback,
    delta_eval,
    lambda_disk_pullback,
    lambda_eval,
    modular_eval,
)
from .powerlemma import (
    ExtremalConstruction,
    OracleResult,
    admissible,
    construction_coefficient_power,
    power_lemma_min_X,
    power_lemma_oracle,
)
from .shapes import SHAPE_TAGS, DecayProfile, bound_shape

__all__ = [
    "BivarIntPoly",
    "CensusRecord",
    "CensusResult",
    "DecayProfile",
    "EVALUATORS",
    "ExtremalConstruction",
    "ModularValue",
    "OracleResult",
    "SHAPE_TAGS",
    "admissible",
    "bound_shape",
    "census",
    "census_records",
    "construction_coefficient_power",
    "cover_count_bound_holds",
    "covers_sample",
    "delta_disk_pullback",
    "delta_eval",
    "disk_cover",
    "enumerate_rationals",
    "jensen_zero_bound",
    "lambda_disk_pullback",
    "lambda_eval",
    "masser_T_threshold",
    "modular_eval",
    "power_lemma_min_X",
    "power_lemma_oracle",
    "vanishing_polynomial",
]
