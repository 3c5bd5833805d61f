"""cup 積と特性写像 ι, η, χ"""

from asymptotic_cyclic.charmaps.diagonal import DiagonalModule, cup_diagonal, leibniz_defect, shuffle_cup_diagonal, tensor
from asymptotic_cyclic.charmaps.evaluation import (
    GeneralEvenEvaluation,
    GeneralEvenTerm,
    HeatModule,
    chi_element,
    chi_evaluate,
    general_even_index_evaluation,
    hopf_simplex_diagonal,
)
from asymptotic_cyclic.charmaps.exceptions import ArgumentShapeError, CharMapError, WordLengthError
from asymptotic_cyclic.charmaps.hopf import HopfPolynomialModule, HopfWord
from asymptotic_cyclic.charmaps.shuffles import Shuffle, shuffles
from asymptotic_cyclic.charmaps.weights import (
    EtaTerm,
    IotaExpansion,
    IotaTerm,
    alpha,
    alpha_partial_sum,
    eta_cochain,
    eta_element,
    eta_expand,
    iota_cochain,
    iota_element,
    iota_expand,
)

__all__ = [
    "ArgumentShapeError",
    "CharMapError",
    "DiagonalModule",
    "EtaTerm",
    "GeneralEvenEvaluation",
    "GeneralEvenTerm",
    "HeatModule",
    "HopfPolynomialModule",
    "HopfWord",
    "IotaExpansion",
    "IotaTerm",
    "Shuffle",
    "WordLengthError",
    "alpha",
    "alpha_partial_sum",
    "chi_element",
    "chi_evaluate",
    "cup_diagonal",
    "eta_cochain",
    "eta_element",
    "eta_expand",
    "general_even_index_evaluation",
    "hopf_simplex_diagonal",
    "iota_cochain",
    "iota_element",
    "iota_expand",
    "leibniz_defect",
    "shuffle_cup_diagonal",
    "shuffles",
    "tensor",
]
