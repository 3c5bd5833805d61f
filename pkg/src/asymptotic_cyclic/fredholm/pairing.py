"""K₀ とのペアリングと McKean–Singer 指数"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import BaseModel
from scipy.linalg import expm

from asymptotic_cyclic.config.app import FredholmSettings, QuadratureSettings
from asymptotic_cyclic.fredholm.chern import chern_component
from asymptotic_cyclic.fredholm.exceptions import HypothesisError, IndexRoundingError
from asymptotic_cyclic.fredholm.heat import Spectrum, check_square, commutator, heat_kernel, operator_norm
from asymptotic_cyclic.fredholm.jlo import JloMode
from asymptotic_cyclic.fredholm.module import EvenFredholmModule
from asymptotic_cyclic.reports import ComplexPair, complex_pair

logger = logging.getLogger(__name__)

CochainEvaluator = Callable[[int, Sequence[np.ndarray]], complex]


def check_idempotent(fm: EvenFredholmModule, p: np.ndarray, settings: FredholmSettings | None = None) -> None:
    """p² = p を確かめる

    Raises:
        DimensionMismatchError: 形が合わない場合
        HypothesisError: 冪等でない場合
    """
    settings = settings or FredholmSettings()
    check_square(p, fm.dim, "p")
    defect = float(np.max(np.abs(p @ p - p), initial=0.0))
    if defect > settings.idempotent_tolerance:
        msg = f"p is not idempotent (max |p^2 - p| = {defect:.3g})"
        raise HypothesisError(msg, name="p^2 = p", defect=defect)


def jlo_chern_evaluator(
    fm: EvenFredholmModule,
    mode: JloMode = "exact",
    quadrature: QuadratureSettings | None = None,
    settings: FredholmSettings | None = None,
) -> CochainEvaluator:
    """次数 2n と引数から Ch^{2n}(D) を返す評価関数"""

    def evaluate(degree: int, args: Sequence[np.ndarray]) -> complex:
        return chern_component(fm, degree // 2, args, mode, quadrature, settings)

    return evaluate


class PairingTerm(BaseModel):
    """ペアリング級数の1項"""

    n: int
    degree: int
    factor: float
    cochain_value: ComplexPair
    contribution: ComplexPair

    model_config = {"frozen": True}


class EvenPairing(BaseModel):
    """F_φ(p) = Σ_{n≤N} (−1)ⁿ(2n)!/n!·φ_{2n}(p, …, p) の部分和"""

    truncation: int
    terms: list[PairingTerm]
    total: ComplexPair

    model_config = {"frozen": True}

    @property
    def complex_total(self) -> complex:
        """部分和"""
        return complex(*self.total)


def pair_even_K0(fm: EvenFredholmModule, evaluator: CochainEvaluator, p: np.ndarray, n_max: int, settings: FredholmSettings | None = None) -> EvenPairing:
    """偶コチェインと冪等元 p のペアリングの部分和

    Args:
        fm: 偶 Fredholm 加群
        evaluator: (次数 2n, 引数) → φ_{2n}(引数)
        p: 冪等行列
        n_max: 打ち切り N
        settings: 許容誤差

    Returns:
        EvenPairing: 項ごとの係数と値

    Raises:
        HypothesisError: p が冪等でない場合
    """
    if n_max < 0:
        msg = f"truncation must be >= 0, got {n_max}"
        raise ValueError(msg)
    check_idempotent(fm, p, settings)
    terms = []
    total = 0j
    for n in range(n_max + 1):
        factor = (-1) ** n * math.factorial(2 * n) / math.factorial(n)
        value = evaluator(2 * n, [p] * (2 * n + 1))
        total += factor * value
        terms.append(PairingTerm(n=n, degree=2 * n, factor=factor, cochain_value=complex_pair(value), contribution=complex_pair(factor * value)))
        logger.debug("pairing term n=%d: %s", n, value)
    return EvenPairing(truncation=n_max, terms=terms, total=complex_pair(total))


class McKeanSingerResult(BaseModel):
    """Str(p e^{−t(pDp)²} p) の t ごとの値と丸めた指数"""

    times: list[float]
    values: list[ComplexPair]
    spread: float
    value: ComplexPair
    index: int

    model_config = {"frozen": True}


def check_commutes(fm: EvenFredholmModule, p: np.ndarray, settings: FredholmSettings | None = None) -> float:
    """[D, p] = 0 を確かめて ‖[D,p]‖ を返す

    Raises:
        HypothesisError: 許容誤差を超える場合
    """
    settings = settings or FredholmSettings()
    defect = operator_norm(commutator(fm.dirac, p))
    if defect > settings.commutator_tolerance:
        msg = f"{fm.name}: [D, p] does not vanish (norm {defect:.3g})"
        raise HypothesisError(msg, name="[D, p] = 0", defect=defect)
    return defect


def round_index(value: complex, guard: float) -> int:
    """ガード幅の内側なら最も近い整数に丸める

    Raises:
        IndexRoundingError: 実部が整数から guard 以上離れているか、虚部が guard を超える場合
    """
    nearest = round(value.real)
    if abs(value.real - nearest) > guard or abs(value.imag) > guard:
        msg = f"index value {value} is not within {guard} of an integer"
        raise IndexRoundingError(msg, value=value.real)
    return int(nearest)


def mckean_singer_index(fm: EvenFredholmModule, p: np.ndarray, settings: FredholmSettings | None = None) -> McKeanSingerResult:
    """McKean–Singer の公式で ind(D_p) を求める

    Raises:
        HypothesisError: p が自己共役な冪等元でない、[D,p] ≠ 0、または t 依存性が許容誤差を超える場合
        IndexRoundingError: 値が整数に近くない場合
    """
    settings = settings or FredholmSettings()
    check_idempotent(fm, p, settings)
    adjoint_defect = float(np.max(np.abs(p - p.conj().T), initial=0.0))
    if adjoint_defect > settings.idempotent_tolerance:
        msg = f"p is not self-adjoint (max |p - p^*| = {adjoint_defect:.3g})"
        raise HypothesisError(msg, name="p = p^*", defect=adjoint_defect)
    check_commutes(fm, p, settings)

    compressed = Spectrum.of(p @ fm.dirac @ p, "pDp")
    values = [fm.supertrace(p @ heat_kernel(compressed, t) @ p) for t in settings.mckean_singer_times]
    spread = max(abs(v - w) for v in values for w in values)
    if spread > settings.t_independence_tolerance:
        msg = f"{fm.name}: Str(p e^(-t D_p^2) p) depends on t (spread {spread:.3g})"
        raise HypothesisError(msg, name="t-independence", defect=spread)
    value = values[-1]
    index = round_index(value, settings.rounding_guard)
    logger.info("%s: McKean-Singer index %d", fm.name, index)
    return McKeanSingerResult(
        times=list(settings.mckean_singer_times),
        values=[complex_pair(v) for v in values],
        spread=spread,
        value=complex_pair(value),
        index=index,
    )


class StabilityReport(BaseModel):
    """p とその小さなユニタリ共役でのペアリングの比較"""

    eps: float
    truncation: int
    base: ComplexPair
    perturbed: ComplexPair
    difference: float

    model_config = {"frozen": True}


def perturbation_stability(
    fm: EvenFredholmModule,
    p: np.ndarray,
    eps: float,
    n_max: int = 2,
    mode: JloMode = "block",
    seed: int = 0,
    settings: FredholmSettings | None = None,
) -> StabilityReport:
    """JLO Chern とのペアリングを p と u p u*（u = exp(iεH)、H は偶な自己共役）で比べる"""
    rng = np.random.default_rng(seed)
    h = rng.standard_normal((fm.dim, fm.dim)) + 1j * rng.standard_normal((fm.dim, fm.dim))
    h = (h + h.conj().T) / 2
    k = fm.dim_plus
    h[:k, k:] = 0
    h[k:, :k] = 0
    u = expm(1j * eps * h)
    moved = u @ p @ u.conj().T
    evaluator = jlo_chern_evaluator(fm, mode, settings=settings)
    # u p u* の冪等性は丸め誤差の範囲で確かめる
    loose = (settings or FredholmSettings()).model_copy(update={"idempotent_tolerance": 1e-9})
    base = pair_even_K0(fm, evaluator, p, n_max, loose).complex_total
    perturbed = pair_even_K0(fm, evaluator, moved, n_max, loose).complex_total
    difference = abs(base - perturbed)
    logger.info("%s: pairing moved by %.3g under a unitary perturbation of size %g", fm.name, difference, eps)
    return StabilityReport(eps=eps, truncation=n_max, base=complex_pair(base), perturbed=complex_pair(perturbed), difference=difference)
