"""JLO Chern 指標 Ch^{2n}(D) とその増大度"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.config.app import FredholmSettings, GrowthSettings, QuadratureSettings
from asymptotic_cyclic.fredholm.heat import commutator, operator_norm
from asymptotic_cyclic.fredholm.jlo import JloMode, jlo_bracket
from asymptotic_cyclic.fredholm.module import EvenFredholmModule
from asymptotic_cyclic.growth import EntireVerdict, entire_test

logger = logging.getLogger(__name__)

CHERN_PROFILE_PREFIX = 96
BOUND_SLACK = 1e-9


def chern_component(
    fm: EvenFredholmModule,
    n: int,
    args: Sequence[np.ndarray],
    mode: JloMode = "exact",
    quadrature: QuadratureSettings | None = None,
    settings: FredholmSettings | None = None,
) -> complex:
    """Ch^{2n}(D)(a₀, …, a_{2n}) = ⟨a₀, [D,a₁], …, [D,a_{2n}]⟩

    Raises:
        ValueError: n が負、または引数が 2n+1 個でない場合
    """
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise ValueError(msg)
    if len(args) != 2 * n + 1:
        msg = f"Ch^{2 * n} needs {2 * n + 1} arguments, got {len(args)}"
        raise ValueError(msg)
    substituted = [args[0], *(commutator(fm.dirac, a) for a in args[1:])]
    return jlo_bracket(fm, substituted, mode, quadrature, settings)


def boundedness_constant(fm: EvenFredholmModule) -> float:
    """N(D) = max_a (‖a‖ + ‖[D,a]‖)/‖a‖（作用素ノルム、代数が空なら1）"""
    return fm.boundedness_constant


class ChernSample(BaseModel):
    """単位球からの標本での |Ch^{2n}| と上界"""

    n: int
    value: float
    bound: float
    within: bool

    model_config = {"frozen": True}


class ChernProfile(BaseModel):
    """Ch^{2n} のノルム上界の列と entire 判定"""

    dirac_norm: float
    heat_trace: float
    bounds: list[float]
    samples: list[ChernSample]
    entire: EntireVerdict

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        """標本が上界に収まり、entire と判定されたか"""
        return all(s.within for s in self.samples) and self.entire.entire_consistent


def _unit_even_matrix(fm: EvenFredholmModule, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((fm.dim, fm.dim)) + 1j * rng.standard_normal((fm.dim, fm.dim))
    p = fm.dim_plus
    a[:p, p:] = 0
    a[p:, :p] = 0
    return a / operator_norm(a)


def chern_bound(dirac_norm: float, heat_trace: float, n: int) -> float:
    """β_n = (2‖D‖)^{2n} Tr(e^{−D²})/(2n)!（下位桁あふれは0）"""
    if n == 0:
        return heat_trace
    if dirac_norm == 0:
        return 0.0
    return math.exp(2 * n * math.log(2 * dirac_norm) + math.log(heat_trace) - math.lgamma(2 * n + 1))


def chern_norm_profile(
    fm: EvenFredholmModule,
    prefix_length: int = CHERN_PROFILE_PREFIX,
    sample_degrees: int = 4,
    samples: int = 3,
    seed: int = 0,
    growth: GrowthSettings | None = None,
) -> ChernProfile:
    """単位球上の ‖Ch^{2n}‖ の Hölder 型上界 β_n を並べ、entire 判定にかける

    n ≤ sample_degrees ではランダムな偶行列（作用素ノルム1）で |Ch^{2n}| を評価し、β_n 以下であることを確かめる。
    """
    dirac_norm = operator_norm(fm.dirac)
    heat_trace = fm.trace(fm.heat(1.0)).real
    bounds = [chern_bound(dirac_norm, heat_trace, n) for n in range(prefix_length + 1)]

    rng = np.random.default_rng(seed)
    checked = []
    for n in range(sample_degrees + 1):
        for _ in range(samples):
            args = [_unit_even_matrix(fm, rng) for _ in range(2 * n + 1)]
            value = abs(chern_component(fm, n, args, mode="block"))
            within = value <= bounds[n] * (1 + BOUND_SLACK) + BOUND_SLACK
            checked.append(ChernSample(n=n, value=value, bound=bounds[n], within=within))
            if not within:
                logger.warning("%s: |Ch^%d| = %.3g exceeds the bound %.3g", fm.name, 2 * n, value, bounds[n])

    verdict = entire_test(bounds, 0, prefix_length, growth)
    logger.info("%s: Chern profile radius %s (entire=%s)", fm.name, verdict.radius, verdict.entire_consistent)
    return ChernProfile(dirac_norm=dirac_norm, heat_trace=heat_trace, bounds=bounds, samples=checked, entire=verdict)
