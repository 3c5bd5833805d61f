"""有限次元 Fredholm 加群、JLO コサイクルと指数ペアリング"""

from asymptotic_cyclic.fredholm.chern import ChernProfile, ChernSample, boundedness_constant, chern_bound, chern_component, chern_norm_profile
from asymptotic_cyclic.fredholm.exceptions import DimensionMismatchError, EndpointKernelError, FredholmError, HypothesisError, IndexRoundingError, ModuleSpecError, QuadratureError
from asymptotic_cyclic.fredholm.heat import HeatCache, Spectrum, commutator, heat, heat_kernel, operator_norm, supertrace
from asymptotic_cyclic.fredholm.index import (
    EvenIndexReport,
    EvenIndexTerm,
    OddConstantTerm,
    OddIndexConstant,
    OddPairing,
    check_unitary,
    eta_evaluator,
    even_index_cochain_pairing,
    index_series_partial_sum,
    odd_index_constant,
    pair_odd_K1,
)
from asymptotic_cyclic.fredholm.jlo import JloEvaluation, JloMode, jlo_bracket, jlo_evaluate, simplex_exponential
from asymptotic_cyclic.fredholm.module import (
    BUNDLED_MODULES,
    EvenFredholmModule,
    LinearPath,
    ModuleSpec,
    OddFredholmModule,
    build_module,
    bundled_module,
    conjugation_path,
    dirac_path,
    load_module_spec,
    velocity_defect,
)
from asymptotic_cyclic.fredholm.pairing import (
    EvenPairing,
    McKeanSingerResult,
    PairingTerm,
    StabilityReport,
    check_commutes,
    check_idempotent,
    jlo_chern_evaluator,
    mckean_singer_index,
    pair_even_K0,
    perturbation_stability,
    round_index,
)
from asymptotic_cyclic.fredholm.spectral import (
    Crossing,
    SpectralFlowIntegral,
    SpectralFlowResult,
    SpectralFlowSweep,
    SweepEntry,
    negative_count,
    spectral_flow_crossings,
    spectral_flow_integral,
    spectral_flow_sweep,
)

__all__ = [
    "BUNDLED_MODULES",
    "ChernProfile",
    "ChernSample",
    "Crossing",
    "DimensionMismatchError",
    "EndpointKernelError",
    "EvenFredholmModule",
    "EvenIndexReport",
    "EvenIndexTerm",
    "EvenPairing",
    "FredholmError",
    "HeatCache",
    "HypothesisError",
    "IndexRoundingError",
    "JloEvaluation",
    "JloMode",
    "LinearPath",
    "McKeanSingerResult",
    "ModuleSpec",
    "ModuleSpecError",
    "OddConstantTerm",
    "OddFredholmModule",
    "OddIndexConstant",
    "OddPairing",
    "PairingTerm",
    "QuadratureError",
    "SpectralFlowIntegral",
    "SpectralFlowResult",
    "SpectralFlowSweep",
    "Spectrum",
    "StabilityReport",
    "SweepEntry",
    "boundedness_constant",
    "build_module",
    "bundled_module",
    "check_commutes",
    "check_idempotent",
    "check_unitary",
    "chern_bound",
    "chern_component",
    "chern_norm_profile",
    "commutator",
    "conjugation_path",
    "dirac_path",
    "eta_evaluator",
    "even_index_cochain_pairing",
    "heat",
    "heat_kernel",
    "index_series_partial_sum",
    "jlo_bracket",
    "jlo_chern_evaluator",
    "jlo_evaluate",
    "load_module_spec",
    "mckean_singer_index",
    "negative_count",
    "odd_index_constant",
    "operator_norm",
    "pair_even_K0",
    "pair_odd_K1",
    "perturbation_stability",
    "round_index",
    "simplex_exponential",
    "spectral_flow_crossings",
    "spectral_flow_integral",
    "spectral_flow_sweep",
    "supertrace",
    "velocity_defect",
]
