"""単体上の普遍指数コサイクルとその検証"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from fractions import Fraction

from pydantic import BaseModel, Field

from asymptotic_cyclic.cocyclic.chains import LinearCombination
from asymptotic_cyclic.cocyclic.cochains import TruncatedCochain, periodic_differential
from asymptotic_cyclic.cocyclic.operators import connes_B, cyclic_N, cyclic_power, hochschild_b
from asymptotic_cyclic.cocyclic.presentation import MixedComplexPresentation, presentation_from_basis
from asymptotic_cyclic.config.app import GrowthSettings
from asymptotic_cyclic.growth import EntireVerdict, GrowthSequence, GrowthVerdict, PrefixTooShortError, Relation, entire_test, nth_root_profile, precedes_prefix
from asymptotic_cyclic.simplex.module import ChainTerm, SimplexChain, SimplexModule, chain_norm, serialize_chain
from asymptotic_cyclic.simplex.points import BASEPOINT, SimplexPoint

logger = logging.getLogger(__name__)

SIMPLEX = SimplexModule()
MIN_GROWTH_PREFIX = 16

CocycleComponent = Callable[[int], SimplexChain]


def cone_point(n: int) -> SimplexChain:
    """δ₀ⁿ(*) = (0, …, 0) ∈ Δⁿ"""
    x: SimplexChain = LinearCombination.basis(BASEPOINT)
    for k in range(n):
        x = SIMPLEX.coface(0, k, x)
    return x


def universal_cocycle(n: int) -> SimplexChain:
    """φ_{2n}: n = 0 では *、n ≥ 1 では ((−1)ⁿ/(2ⁿn!))·Σ_{r=0}^{n} τ^{2r}δ₀^{2n}(*)"""
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise ValueError(msg)
    if n == 0:
        return LinearCombination.basis(BASEPOINT)
    cone = cone_point(2 * n)
    total: SimplexChain = LinearCombination()
    for r in range(n + 1):
        total = total + cyclic_power(SIMPLEX, 2 * n, cone, 2 * r)
    return total * Fraction((-1) ** n, 2**n * math.factorial(n))


def corrupted_cocycle(degree_n: int = 1, factor: Fraction = Fraction(2)) -> CocycleComponent:
    """φ_{2·degree_n} の錐点の係数だけを factor 倍した成分列（変異テスト用）"""

    def component(n: int) -> SimplexChain:
        phi = universal_cocycle(n)
        if n != degree_n:
            return phi
        cone = SimplexPoint.vertex(2 * n, 0)
        return phi + LinearCombination.basis(cone, phi.coefficient(cone) * (factor - 1))

    return component


def universal_prefix(n_max: int, component: CocycleComponent = universal_cocycle) -> TruncatedCochain:
    """(φ₀, φ₂, …, φ_{2N}) の有限切断"""
    return TruncatedCochain.from_components(SIMPLEX, 0, [component(n) for n in range(n_max + 1)])


def universal_norm(n: int) -> Fraction:
    """‖φ_{2n}‖ の閉じた形 (n+1)/(2ⁿn!)"""
    return Fraction(n + 1, 2**n * math.factorial(n))


class ResidueEntry(BaseModel):
    """b(φ_{2n}) + B(φ_{2n+2}) の検査結果"""

    n: int
    degree: int
    zero: bool
    b_part: list[ChainTerm]
    B_part: list[ChainTerm]
    residue: list[ChainTerm]

    model_config = {"frozen": True}


class IntermediateEntry(BaseModel):
    """B(τ^{2r}δ₀^{2n}(*)) の検査結果"""

    n: int
    r: int
    expected: str = Field(..., description="2N(cone) または 0")
    passed: bool
    witness: list[ChainTerm] | None = None

    model_config = {"frozen": True}


class CocycleWindowReport(BaseModel):
    """verify_cocycle_window のレポート"""

    window: int
    residues: list[ResidueEntry]
    intermediates: list[IntermediateEntry]
    passed: bool

    model_config = {"frozen": True}


def verify_cocycle_window(window: int, component: CocycleComponent = universal_cocycle) -> CocycleWindowReport:
    """0 ≤ n < N で b(φ_{2n}) + B(φ_{2n+2}) = 0 を厳密に確かめ、中間恒等式も独立に確かめる

    中間恒等式は r < n で B(τ^{2r}δ₀^{2n}(*)) = 2N_{2n−1}δ₀^{2n−1}(*)、r = n で 0。

    Args:
        window: N（1以上）
        component: 検証するコサイクルの成分（既定は普遍コサイクル）

    Returns:
        CocycleWindowReport: 次数ごとの剰余と中間恒等式
    """
    if window < 1:
        msg = f"window must be >= 1, got {window}"
        raise ValueError(msg)

    prefix = universal_prefix(window, component)
    image = periodic_differential(SIMPLEX, prefix)
    residues = []
    for n in range(window):
        degree = 2 * n + 1
        b_part = hochschild_b(SIMPLEX, 2 * n, prefix.components[n])
        B_part = connes_B(SIMPLEX, 2 * n + 2, prefix.components[n + 1])
        residue = image.component_at(degree)
        zero = SIMPLEX.is_zero(degree, residue) and residue == b_part + B_part
        residues.append(
            ResidueEntry(n=n, degree=degree, zero=zero, b_part=serialize_chain(b_part), B_part=serialize_chain(B_part), residue=serialize_chain(residue))
        )
        if not zero:
            logger.warning("b(phi_%d) + B(phi_%d) is nonzero: %r", 2 * n, 2 * n + 2, residue)

    intermediates = []
    for n in range(1, window + 1):
        cone = cone_point(2 * n)
        target = cyclic_N(SIMPLEX, 2 * n - 1, cone_point(2 * n - 1)) * 2
        for r in range(n + 1):
            value = connes_B(SIMPLEX, 2 * n, cyclic_power(SIMPLEX, 2 * n, cone, 2 * r))
            expected = target if r < n else LinearCombination()
            passed = value == expected
            intermediates.append(
                IntermediateEntry(n=n, r=r, expected="2N(cone)" if r < n else "0", passed=passed, witness=None if passed else serialize_chain(value))
            )

    passed = all(e.zero for e in residues) and all(e.passed for e in intermediates)
    logger.info("cocycle window N=%d verified: passed=%s", window, passed)
    return CocycleWindowReport(window=window, residues=residues, intermediates=intermediates, passed=passed)


class OddImageEntry(BaseModel):
    """奇数次の像の恒等式の検査結果"""

    identity: str
    n: int
    s: int
    passed: bool
    witness: list[ChainTerm] | None = None

    model_config = {"frozen": True}


def odd_image_identities(window: int) -> list[OddImageEntry]:
    """奇数次の作用素恒等式を点ごとに確かめる

    B_{2n+1}(τˢδ₀^{2n+1}(*)) = 2N_{2n}δ₀^{2n}(*)（0 ≤ n < N, 0 ≤ s ≤ 2n+1）と、
    次数を揃えた読み b_{2n−1}(τˢδ₀^{2n−1}(*)) = τ^{s'}δ₀^{2n}(*)（s が偶数なら s' = s+1、奇数なら s' = s）。
    """
    entries = []
    for n in range(window):
        degree = 2 * n + 1
        target = cyclic_N(SIMPLEX, 2 * n, cone_point(2 * n)) * 2
        for s in range(degree + 1):
            value = connes_B(SIMPLEX, degree, LinearCombination.basis(SimplexPoint.vertex(degree, s)))
            passed = value == target
            entries.append(OddImageEntry(identity="B tau^s cone = 2 N cone", n=n, s=s, passed=passed, witness=None if passed else serialize_chain(value)))
    for n in range(1, window + 1):
        degree = 2 * n - 1
        for s in range(degree + 1):
            value = hochschild_b(SIMPLEX, degree, LinearCombination.basis(SimplexPoint.vertex(degree, s)))
            expected = LinearCombination.basis(SimplexPoint.vertex(degree + 1, s + 1 if s % 2 == 0 else s))
            passed = value == expected
            entries.append(OddImageEntry(identity="b tau^s cone", n=n, s=s, passed=passed, witness=None if passed else serialize_chain(value)))
    return entries


class CocycleGrowthReport(BaseModel):
    """classify_cocycle_growth のレポート"""

    prefix_length: int
    norms: list[str] = Field(..., description="‖φ_{2n}‖ の厳密値")
    norms_match_formula: bool = Field(..., description="‖φ_{2n}‖ = (n+1)/(2ⁿn!) が全 n で成り立つか")
    root_profile: list[float]
    verdict: GrowthVerdict
    entire: EntireVerdict
    bounded_class_consistent: bool = Field(..., description="E(1) に入ることと整合するか")
    passed: bool

    model_config = {"frozen": True, "ser_json_inf_nan": "strings"}


def classify_cocycle_growth(prefix_length: int, settings: GrowthSettings | None = None) -> CocycleGrowthReport:
    """ノルム列を成長階層に渡し、E(1) に属し entire でないことを確かめる

    Raises:
        PrefixTooShortError: N < 16 の場合
    """
    settings = settings or GrowthSettings()
    if prefix_length < MIN_GROWTH_PREFIX:
        msg = f"cocycle growth classification needs N >= {MIN_GROWTH_PREFIX}, got {prefix_length}"
        raise PrefixTooShortError(msg, required=MIN_GROWTH_PREFIX, available=prefix_length)

    norms = [chain_norm(universal_cocycle(n)) for n in range(prefix_length + 1)]
    x = GrowthSequence.from_terms("|phi_2n|", norms)
    one = GrowthSequence.factorial_ratio("1", prefix_length)
    profile = nth_root_profile(x, one, prefix_length)
    verdict = precedes_prefix(x, one, settings.probe_radii, prefix_length, settings)
    entire = entire_test(norms, 0, prefix_length, settings)
    match = all(v == universal_norm(n) for n, v in enumerate(norms))
    bounded = verdict.relation == Relation.HOLDS
    logger.info("universal cocycle growth: E(1)=%s, entire=%s, radius=%s", bounded, entire.entire_consistent, entire.radius)
    return CocycleGrowthReport(
        prefix_length=prefix_length,
        norms=[str(v) for v in norms],
        norms_match_formula=match,
        root_profile=profile,
        verdict=verdict,
        entire=entire,
        bounded_class_consistent=bounded,
        passed=match and bounded and not entire.entire_consistent,
    )


def vertex_chain_presentation(max_degree: int) -> MixedComplexPresentation:
    """頂点（座標が0か1）の点で張られる有限部分の混合複体表示"""
    bases = {n: [SimplexPoint.vertex(n, s) for s in range(n + 1)] for n in range(max_degree + 1)}
    return presentation_from_basis(SIMPLEX, bases)
