"""重み α_r と特性写像 ι, η の展開"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from asymptotic_cyclic.charmaps.diagonal import DiagonalModule, cup_diagonal
from asymptotic_cyclic.charmaps.hopf import HopfWord
from asymptotic_cyclic.cocyclic.chains import LinearCombination
from asymptotic_cyclic.cocyclic.cochains import TruncatedCochain
from asymptotic_cyclic.simplex.module import SimplexChain
from asymptotic_cyclic.simplex.points import SimplexPoint

HopfSimplexElement = LinearCombination[tuple[HopfWord, SimplexPoint]]


def alpha(r: int) -> Fraction:
    """α₀ = 1、r ≥ 1 では α_r = 1/(2r)! − 1/(2r−2)!"""
    if r < 0:
        msg = f"r must be >= 0, got {r}"
        raise ValueError(msg)
    if r == 0:
        return Fraction(1)
    return Fraction(1, math.factorial(2 * r)) - Fraction(1, math.factorial(2 * r - 2))


def alpha_partial_sum(n: int) -> Fraction:
    """Σ_{r=0}^{n} α_r（望遠鏡和で 1/(2n)!）"""
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise ValueError(msg)
    return sum((alpha(r) for r in range(n + 1)), Fraction(0))


@dataclass(frozen=True)
class IotaTerm:
    """ι(φ)_{2n} の1項 α_r·(I^r ∪ φ_{2n−2r})"""

    r: int
    weight: Fraction
    chain: SimplexChain


@dataclass(frozen=True)
class IotaExpansion:
    """ι(φ) の次数 2n 成分"""

    degree: int
    terms: tuple[IotaTerm, ...]

    @property
    def weight_sum(self) -> Fraction:
        """重みの和"""
        return sum((t.weight for t in self.terms), Fraction(0))


def iota_expand(prefix: TruncatedCochain, n_max: int) -> list[IotaExpansion]:
    """偶パリティの切断 (φ₀, φ₂, …) から ι(φ)_{2n}（0 ≤ n ≤ n_max）の項を並べる

    Raises:
        ValueError: 切断が偶パリティでない、または φ_{2·n_max} まで無い場合
    """
    if prefix.parity != 0:
        msg = f"iota_expand needs an even prefix, got parity {prefix.parity}"
        raise ValueError(msg)
    if prefix.length < n_max:
        msg = f"prefix reaches degree {prefix.top_degree}, need {2 * n_max}"
        raise ValueError(msg)
    out = []
    for n in range(n_max + 1):
        terms = tuple(IotaTerm(r=r, weight=alpha(r), chain=prefix.components[n - r]) for r in range(n + 1))
        out.append(IotaExpansion(degree=2 * n, terms=terms))
    return out


def iota_element(diag: DiagonalModule[HopfWord, SimplexPoint], expansion: IotaExpansion) -> HopfSimplexElement:
    """Σ_r α_r·(I^r ∪ φ_{2n−2r})（I^r は長さ 2r の単位語）"""
    total: HopfSimplexElement = LinearCombination()
    for term in expansion.terms:
        unit = LinearCombination.basis(HopfWord.unit(2 * term.r))
        total = total + cup_diagonal(diag, unit, 2 * term.r, term.chain, expansion.degree - 2 * term.r) * term.weight
    return total


def iota_cochain(diag: DiagonalModule[HopfWord, SimplexPoint], prefix: TruncatedCochain) -> TruncatedCochain:
    """ι(φ) を対角加群の偶パリティの切断として返す"""
    return TruncatedCochain.from_components(diag, 0, [iota_element(diag, e) for e in iota_expand(prefix, prefix.length)])


@dataclass(frozen=True)
class EtaTerm:
    """η(φ_{2n}) = (X | φ_{2n})（次数 2n+1）"""

    degree: int
    word: HopfWord
    chain: SimplexChain


def eta_expand(component: SimplexChain, degree: int) -> EtaTerm:
    """次数 degree の成分に語 X を対応させ、次数を1つ上げる"""
    if degree < 0:
        msg = f"degree must be >= 0, got {degree}"
        raise ValueError(msg)
    return EtaTerm(degree=degree + 1, word=HopfWord.primitive(), chain=component)


def eta_element(diag: DiagonalModule[HopfWord, SimplexPoint], term: EtaTerm) -> HopfSimplexElement:
    """X ∪ φ_{2n}"""
    return cup_diagonal(diag, LinearCombination.basis(term.word), 1, term.chain, term.degree - 1)


def eta_cochain(diag: DiagonalModule[HopfWord, SimplexPoint], prefix: TruncatedCochain) -> TruncatedCochain:
    """η(φ) を対角加群の奇パリティの切断として返す"""
    if prefix.parity != 0:
        msg = f"eta_cochain needs an even prefix, got parity {prefix.parity}"
        raise ValueError(msg)
    terms = [eta_expand(c, prefix.degree(k)) for k, c in enumerate(prefix.components)]
    return TruncatedCochain.from_components(diag, 1, [eta_element(diag, t) for t in terms])
