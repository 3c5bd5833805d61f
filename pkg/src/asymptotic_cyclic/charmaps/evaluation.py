"""特性写像 χ による Fredholm 加群上の汎関数の評価"""

from __future__ import annotations

import logging
import math
from collections.abc import MutableMapping, Sequence
from fractions import Fraction
from typing import Literal, Protocol

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.charmaps.diagonal import DiagonalModule
from asymptotic_cyclic.charmaps.exceptions import ArgumentShapeError, WordLengthError
from asymptotic_cyclic.charmaps.hopf import HopfPolynomialModule, HopfWord
from asymptotic_cyclic.charmaps.weights import HopfSimplexElement, alpha_partial_sum, iota_element, iota_expand
from asymptotic_cyclic.reports import ComplexPair, complex_pair
from asymptotic_cyclic.simplex.cocycle import universal_prefix
from asymptotic_cyclic.simplex.module import SimplexModule
from asymptotic_cyclic.simplex.points import SimplexPoint

logger = logging.getLogger(__name__)

Flavor = Literal["even", "odd"]
HeatCacheMapping = MutableMapping[Fraction, np.ndarray]


class HeatModule(Protocol):
    """χ の評価に必要な Fredholm 加群の操作"""

    @property
    def dim(self) -> int: ...

    @property
    def dirac(self) -> np.ndarray: ...

    def heat(self, t: float) -> np.ndarray: ...

    def trace(self, a: np.ndarray) -> complex: ...

    def supertrace(self, a: np.ndarray) -> complex: ...


def hopf_simplex_diagonal() -> DiagonalModule[HopfWord, SimplexPoint]:
    """Diag(ℂ[X] ⊗ 単体)"""
    return DiagonalModule(HopfPolynomialModule(), SimplexModule())


def _heat(fm: HeatModule, t: Fraction, cache: HeatCacheMapping | None) -> np.ndarray:
    if cache is None:
        return fm.heat(float(t))
    kernel = cache.get(t)
    if kernel is None:
        kernel = fm.heat(float(t))
        cache[t] = kernel
    return kernel


def chi_evaluate(
    fm: HeatModule,
    word: HopfWord,
    point: SimplexPoint,
    args: Sequence[np.ndarray],
    flavor: Flavor = "even",
    heat_cache: HeatCacheMapping | None = None,
) -> complex:
    """χ(h¹ ⊗ … ⊗ hⁿ | t₁, …, tₙ)(a₀, …, aₙ) = Str(a₀ e(t₁) h¹(a₁) e(t₂−t₁) … hⁿ(aₙ) e(1−tₙ))

    odd では Str の代わりに Tr を使う。e(t) は間隔 t での熱核。

    Args:
        fm: Fredholm 加群
        word: 長さ n の Hopf 語
        point: 次数 n の点
        args: n+1 個の行列
        flavor: "even"（超トレース）または "odd"（トレース）
        heat_cache: 間隔ごとの熱核のキャッシュ

    Returns:
        complex: 評価値

    Raises:
        WordLengthError: 語の長さ、点の次数、引数の数が合わない場合
        ArgumentShapeError: 行列の形が加群の次元と合わない場合
    """
    n = point.degree
    if word.degree != n:
        msg = f"word of length {word.degree} does not match point of degree {n}"
        raise WordLengthError(msg, expected=n, actual=word.degree)
    if len(args) != n + 1:
        msg = f"degree {n} needs {n + 1} arguments, got {len(args)}"
        raise WordLengthError(msg, expected=n + 1, actual=len(args))
    expected = (fm.dim, fm.dim)
    for a in args:
        if a.shape != expected:
            msg = f"argument of shape {a.shape} does not match module dimension {fm.dim}"
            raise ArgumentShapeError(msg, expected=expected, actual=a.shape)
    if flavor not in ("even", "odd"):
        msg = f"unknown flavor: {flavor}"
        raise ValueError(msg)

    gaps = point.gaps()
    product = args[0] @ _heat(fm, gaps[0], heat_cache)
    for k in range(1, n + 1):
        product = product @ word.act(k, args[k], fm.dirac) @ _heat(fm, gaps[k], heat_cache)
    return fm.supertrace(product) if flavor == "even" else fm.trace(product)


def chi_element(
    fm: HeatModule,
    element: HopfSimplexElement,
    args: Sequence[np.ndarray],
    flavor: Flavor = "even",
    heat_cache: HeatCacheMapping | None = None,
) -> complex:
    """対角元 Σ c·(語, 点) に χ を線形に拡張して評価する"""
    total = 0j
    for (word, point), coeff in element.items():
        total += complex(coeff) * chi_evaluate(fm, word, point, args, flavor, heat_cache)
    return total


class GeneralEvenTerm(BaseModel):
    """次数 2n での一般評価と縮約評価"""

    n: int
    degree: int
    pairing_factor: float
    general_value: ComplexPair
    collapsed_value: ComplexPair
    ratio: ComplexPair | None

    model_config = {"frozen": True}


class GeneralEvenEvaluation(BaseModel):
    """ι(φ) を cup 積と χ で評価した対と、縮約した評価の対の比較"""

    terms: list[GeneralEvenTerm]
    general_total: ComplexPair
    collapsed_total: ComplexPair
    max_relative_gap: float

    model_config = {"frozen": True}


def general_even_index_evaluation(fm: HeatModule, p: np.ndarray, n_max: int, heat_cache: HeatCacheMapping | None = None) -> GeneralEvenEvaluation:
    """偶指数コチェインを p と対にする2通りの評価を次数ごとに並べる

    一般評価は ι(φ)_{2n} = Σ_r α_r (I^r ∪ φ_{2n−2r}) を対角加群で展開し、各 (語, 点) を χ で評価する。
    縮約評価は φ_{2n} の係数和 × Σα_r × Str(p e^{−D²})。どちらにも (−1)ⁿ(2n)!/n! を掛けて和をとる。
    """
    if n_max < 0:
        msg = f"n_max must be >= 0, got {n_max}"
        raise ValueError(msg)
    cache: HeatCacheMapping = {} if heat_cache is None else heat_cache
    diag = hopf_simplex_diagonal()
    prefix = universal_prefix(n_max)
    str_heat = fm.supertrace(p @ _heat(fm, Fraction(1), cache))

    terms = []
    general_total = 0j
    collapsed_total = 0j
    max_gap = 0.0
    for n, expansion in enumerate(iota_expand(prefix, n_max)):
        args = [p] * (2 * n + 1)
        general = chi_element(fm, iota_element(diag, expansion), args, "even", cache)
        coefficient_sum = sum((Fraction(c) for _, c in prefix.components[n].items()), Fraction(0))
        collapsed = complex(float(coefficient_sum * alpha_partial_sum(n))) * str_heat
        factor = (-1) ** n * math.factorial(2 * n) / math.factorial(n)
        ratio = general / collapsed if abs(collapsed) > 0 else None
        if ratio is not None:
            max_gap = max(max_gap, abs(ratio - 1))
        general_total += factor * general
        collapsed_total += factor * collapsed
        terms.append(
            GeneralEvenTerm(
                n=n,
                degree=2 * n,
                pairing_factor=factor,
                general_value=complex_pair(general),
                collapsed_value=complex_pair(collapsed),
                ratio=None if ratio is None else complex_pair(ratio),
            )
        )
        logger.debug("degree %d: general=%s collapsed=%s", 2 * n, general, collapsed)

    logger.info("general vs collapsed even evaluation through N=%d: max relative gap %.3g", n_max, max_gap)
    return GeneralEvenEvaluation(terms=terms, general_total=complex_pair(general_total), collapsed_total=complex_pair(collapsed_total), max_relative_gap=max_gap)
