"""偶・奇の指数定理の係数を加群ごとの因子から組み立てる"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.charmaps.evaluation import HeatCacheMapping, chi_element, hopf_simplex_diagonal
from asymptotic_cyclic.charmaps.weights import alpha_partial_sum, eta_cochain
from asymptotic_cyclic.config.app import FredholmSettings
from asymptotic_cyclic.fredholm.exceptions import HypothesisError
from asymptotic_cyclic.fredholm.heat import HeatCache, check_square
from asymptotic_cyclic.fredholm.module import EvenFredholmModule, OddFredholmModule
from asymptotic_cyclic.fredholm.pairing import CochainEvaluator, McKeanSingerResult, PairingTerm, mckean_singer_index
from asymptotic_cyclic.reports import ComplexPair, complex_pair, fraction_str
from asymptotic_cyclic.simplex.cocycle import universal_cocycle, universal_prefix

logger = logging.getLogger(__name__)

RATIO_TOLERANCE = 1e-10


def index_series_partial_sum(n_max: int) -> float:
    """Σ_{n≤N} (n+1)/(2ⁿ(n!)²) を直接足し上げる"""
    return math.fsum((n + 1) / (2**n * math.factorial(n) ** 2) for n in range(n_max + 1))


class EvenIndexTerm(BaseModel):
    """次数 2n の寄与を因子ごとに並べたもの"""

    n: int
    pairing_factor: str
    cocycle_coefficient_sum: str
    iota_weight_sum: str
    supertrace: ComplexPair
    contribution: ComplexPair

    model_config = {"frozen": True}


class EvenIndexReport(BaseModel):
    """⟨χ∘∪∘ι(φ), [p]⟩ の部分和と ind(D_p) の比"""

    truncation: int
    mckean_singer: McKeanSingerResult
    terms: list[EvenIndexTerm]
    total: ComplexPair
    ratio: ComplexPair | None
    series_oracle: float
    passed: bool

    model_config = {"frozen": True}


def even_index_cochain_pairing(fm: EvenFredholmModule, p: np.ndarray, n_max: int, settings: FredholmSettings | None = None) -> EvenIndexReport:
    """偶指数コチェインと [p] のペアリングを縮約した評価で計算する

    次数 2n の寄与は (−1)ⁿ(2n)!/n!（ペアリング）× φ_{2n} の係数和 × Σ_{r≤n} α_r × Str(p e^{−D²})。

    Raises:
        HypothesisError: [D,p] ≠ 0 などで McKean–Singer の仮定が満たされない場合
    """
    if n_max < 0:
        msg = f"truncation must be >= 0, got {n_max}"
        raise ValueError(msg)
    settings = settings or FredholmSettings()
    index = mckean_singer_index(fm, p, settings)
    str_heat = fm.supertrace(p @ fm.heat(1.0))

    terms = []
    total = 0j
    for n in range(n_max + 1):
        pairing_factor = Fraction((-1) ** n * math.factorial(2 * n), math.factorial(n))
        coefficient_sum = sum((Fraction(c) for _, c in universal_cocycle(n).items()), Fraction(0))
        weight_sum = alpha_partial_sum(n)
        contribution = complex(float(pairing_factor * coefficient_sum * weight_sum)) * str_heat
        total += contribution
        terms.append(
            EvenIndexTerm(
                n=n,
                pairing_factor=fraction_str(pairing_factor),
                cocycle_coefficient_sum=fraction_str(coefficient_sum),
                iota_weight_sum=fraction_str(weight_sum),
                supertrace=complex_pair(str_heat),
                contribution=complex_pair(contribution),
            )
        )

    oracle = index_series_partial_sum(n_max)
    if index.index == 0:
        ratio = None
        passed = abs(total) <= RATIO_TOLERANCE
    else:
        ratio = total / index.index
        passed = abs(ratio - oracle) <= RATIO_TOLERANCE
    logger.info("%s: even index pairing %s, ind %d, passed=%s", fm.name, total, index.index, passed)
    return EvenIndexReport(
        truncation=n_max,
        mckean_singer=index,
        terms=terms,
        total=complex_pair(total),
        ratio=None if ratio is None else complex_pair(ratio),
        series_oracle=oracle,
        passed=passed,
    )


def check_unitary(om: OddFredholmModule, g: np.ndarray, tolerance: float = 1e-12) -> None:
    """g†g = Id を確かめる

    Raises:
        HypothesisError: ユニタリでない場合
    """
    check_square(g, om.dim, "g")
    defect = float(np.max(np.abs(g.conj().T @ g - np.eye(om.dim))))
    if defect > tolerance:
        msg = f"g is not unitary (max |g^*g - 1| = {defect:.3g})"
        raise HypothesisError(msg, name="g^* g = 1", defect=defect)


def eta_evaluator(om: OddFredholmModule, n_max: int, heat_cache: HeatCacheMapping | None = None) -> CochainEvaluator:
    """η(φ) = X ∪ φ を χ（トレース版）で評価する関数（次数 1, 3, …, 2N+1）"""
    cochain = eta_cochain(hopf_simplex_diagonal(), universal_prefix(n_max))
    cache: HeatCacheMapping = HeatCache() if heat_cache is None else heat_cache

    def evaluate(degree: int, args: Sequence[np.ndarray]) -> complex:
        component = cochain.component_at(degree)
        if component is None:
            msg = f"eta cochain has no component in degree {degree} (top degree {cochain.top_degree})"
            raise ValueError(msg)
        return chi_element(om, component, args, "odd", cache)

    return evaluate


class OddPairing(BaseModel):
    """(1/√(2πi)) Σ_{n≤N} (−1)ⁿn!·φ_{2n+1}(g⁻¹, g, …, g⁻¹, g) の部分和"""

    truncation: int
    branch: str
    prefactor: ComplexPair
    terms: list[PairingTerm]
    series: ComplexPair
    total: ComplexPair

    model_config = {"frozen": True}

    @property
    def complex_total(self) -> complex:
        """部分和"""
        return complex(*self.total)


def pair_odd_K1(om: OddFredholmModule, evaluator: CochainEvaluator, g: np.ndarray, n_max: int) -> OddPairing:
    """奇コチェインとユニタリ g のペアリングの部分和（√(2πi) は主枝）

    Raises:
        HypothesisError: g がユニタリでない場合
    """
    if n_max < 0:
        msg = f"truncation must be >= 0, got {n_max}"
        raise ValueError(msg)
    check_unitary(om, g)
    g_inv = g.conj().T
    terms = []
    series = 0j
    for n in range(n_max + 1):
        factor = float((-1) ** n * math.factorial(n))
        value = evaluator(2 * n + 1, [g_inv, g] * (n + 1))
        series += factor * value
        terms.append(PairingTerm(n=n, degree=2 * n + 1, factor=factor, cochain_value=complex_pair(value), contribution=complex_pair(factor * value)))
    prefactor = 1 / cmath.sqrt(2j * math.pi)
    total = prefactor * series
    logger.info("%s: odd pairing through N=%d is %s", om.name, n_max, total)
    return OddPairing(truncation=n_max, branch="principal", prefactor=complex_pair(prefactor), terms=terms, series=complex_pair(series), total=complex_pair(total))


class OddConstantTerm(BaseModel):
    """(n+1)/2ⁿ の1項"""

    n: int
    value: str

    model_config = {"frozen": True}


class OddIndexConstant(BaseModel):
    """(1/√(2i)) Σ_{n=1}^{N} (n+1)/2ⁿ（n = 0 の項は別に記録）"""

    truncation: int
    branch: str
    zero_term: str
    terms: list[OddConstantTerm]
    partial_sum: str
    prefactor: ComplexPair
    constant: ComplexPair
    magnitude: float

    model_config = {"frozen": True}


def odd_index_constant(n_max: int) -> OddIndexConstant:
    """奇指数定理の定数の部分和

    Raises:
        ValueError: N < 1 の場合
    """
    if n_max < 1:
        msg = f"N must be >= 1, got {n_max}"
        raise ValueError(msg)
    terms = [OddConstantTerm(n=n, value=fraction_str(Fraction(n + 1, 2**n))) for n in range(1, n_max + 1)]
    partial = sum((Fraction(n + 1, 2**n) for n in range(1, n_max + 1)), Fraction(0))
    prefactor = 1 / cmath.sqrt(2j)
    constant = prefactor * float(partial)
    return OddIndexConstant(
        truncation=n_max,
        branch="principal",
        zero_term=fraction_str(Fraction(1)),
        terms=terms,
        partial_sum=fraction_str(partial),
        prefactor=complex_pair(prefactor),
        constant=complex_pair(constant),
        magnitude=abs(constant),
    )
