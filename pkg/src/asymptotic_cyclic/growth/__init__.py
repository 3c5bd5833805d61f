"""漸近的成長階層モジュール"""

from asymptotic_cyclic.growth.exceptions import GrowthError, NonPositiveTermError, PrefixTooShortError
from asymptotic_cyclic.growth.hierarchy import (
    GrowthClassification,
    classify_sequence,
    entire_test,
    log_ratio,
    nth_root_profile,
    precedes_prefix,
    radius_estimate,
    tail_window,
)
from asymptotic_cyclic.growth.models import (
    EntireVerdict,
    FactorialRatioParams,
    GeneratorSpec,
    GrowthSequence,
    GrowthVerdict,
    RadiusVerdict,
    Relation,
    log_positive,
)

__all__ = [
    "EntireVerdict",
    "FactorialRatioParams",
    "GeneratorSpec",
    "GrowthClassification",
    "GrowthError",
    "GrowthSequence",
    "GrowthVerdict",
    "NonPositiveTermError",
    "PrefixTooShortError",
    "RadiusVerdict",
    "Relation",
    "classify_sequence",
    "entire_test",
    "log_positive",
    "log_ratio",
    "nth_root_profile",
    "precedes_prefix",
    "radius_estimate",
    "tail_window",
]
