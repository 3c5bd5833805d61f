"""余巡回加群と混合複体の汎用モジュール"""

from asymptotic_cyclic.cocyclic.algebra import AlgebraCocyclicModule, diagonal_algebra, dual_numbers, matrix_algebra_m2
from asymptotic_cyclic.cocyclic.chains import LinearCombination, Scalar
from asymptotic_cyclic.cocyclic.cochains import TruncatedCochain, closure_residues, periodic_differential
from asymptotic_cyclic.cocyclic.exceptions import CocyclicError, DegreeMismatchError, IndexRangeError, NormalizationError, PresentationError
from asymptotic_cyclic.cocyclic.identities import IdentityCheck, IdentityReport, IdentitySuite, NormCheck, NormReport, check_identities, mixed_complex_checks, norm_estimate_check
from asymptotic_cyclic.cocyclic.module import BasisCocyclicModule, CocyclicModule, random_rational
from asymptotic_cyclic.cocyclic.mutations import CorruptedCyclicModule, unsigned_cyclic_N
from asymptotic_cyclic.cocyclic.normalize import NormalizationReport, NormalizedModule, NormTable, ScalarAutomorphism, asymptotic_normalize, normalization_report
from asymptotic_cyclic.cocyclic.operators import bar_b_prime, connes_B, cyclic_lambda, cyclic_N, cyclic_power, hochschild_b, one_minus_lambda
from asymptotic_cyclic.cocyclic.presentation import MixedComplexPresentation, PresentationDocument, presentation_from_basis, presentation_from_module
from asymptotic_cyclic.cocyclic.tsygan import TsyganBicomplex, TsyganCochain, tsygan_total_differential

__all__ = [
    "AlgebraCocyclicModule",
    "BasisCocyclicModule",
    "CocyclicError",
    "CocyclicModule",
    "CorruptedCyclicModule",
    "DegreeMismatchError",
    "IdentityCheck",
    "IdentityReport",
    "IdentitySuite",
    "IndexRangeError",
    "LinearCombination",
    "MixedComplexPresentation",
    "NormCheck",
    "NormReport",
    "NormTable",
    "NormalizationError",
    "NormalizationReport",
    "NormalizedModule",
    "PresentationDocument",
    "PresentationError",
    "Scalar",
    "ScalarAutomorphism",
    "TruncatedCochain",
    "TsyganBicomplex",
    "TsyganCochain",
    "asymptotic_normalize",
    "bar_b_prime",
    "check_identities",
    "closure_residues",
    "connes_B",
    "cyclic_N",
    "cyclic_lambda",
    "cyclic_power",
    "diagonal_algebra",
    "dual_numbers",
    "hochschild_b",
    "matrix_algebra_m2",
    "mixed_complex_checks",
    "norm_estimate_check",
    "normalization_report",
    "one_minus_lambda",
    "periodic_differential",
    "presentation_from_basis",
    "presentation_from_module",
    "random_rational",
    "tsygan_total_differential",
    "unsigned_cyclic_N",
]
