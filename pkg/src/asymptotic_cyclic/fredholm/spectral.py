"""スペクトルフロー（固有値の零点通過数と熱核積分）"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import BaseModel
from scipy.integrate import quad

from asymptotic_cyclic.config.app import FredholmSettings
from asymptotic_cyclic.fredholm.exceptions import EndpointKernelError, QuadratureError
from asymptotic_cyclic.fredholm.heat import Spectrum, heat_kernel
from asymptotic_cyclic.fredholm.module import LinearPath, OddFredholmModule, conjugation_path

logger = logging.getLogger(__name__)

KERNEL_TOLERANCE = 1e-10
BISECTION_WIDTH = 1e-10
INTEGRAL_ERROR_LIMIT = 1e-8

MatrixPath = Callable[[float], np.ndarray]


def negative_count(a: np.ndarray) -> int:
    """自己共役行列の負の固有値の個数"""
    return int(np.sum(np.linalg.eigvalsh(a) < 0))


def _smallest_magnitude(a: np.ndarray) -> float:
    return float(np.min(np.abs(np.linalg.eigvalsh(a))))


class Crossing(BaseModel):
    """固有値が0を通過する位置（上向き +1、下向き −1）"""

    u: float
    direction: int
    multiplicity: int

    model_config = {"frozen": True}


class SpectralFlowResult(BaseModel):
    """道に沿った零点通過の符号付き個数"""

    samples: int
    crossings: list[Crossing]
    flow: int
    endpoint_negative_counts: tuple[int, int]

    model_config = {"frozen": True}


def _interior_count(path: MatrixPath, u: float, step: float) -> tuple[float, int]:
    # 標本点がちょうど零点に当たったら少しずらす
    a = path(u)
    while _smallest_magnitude(a) <= KERNEL_TOLERANCE:
        u = min(u + step * 1e-3, 1.0)
        a = path(u)
    return u, negative_count(a)


def _locate(path: MatrixPath, lo: float, count_lo: int, hi: float, count_hi: int, out: list[Crossing]) -> None:
    if hi - lo <= BISECTION_WIDTH:
        change = count_lo - count_hi
        out.append(Crossing(u=(lo + hi) / 2, direction=1 if change > 0 else -1, multiplicity=abs(change)))
        return
    mid, count_mid = _interior_count(path, (lo + hi) / 2, hi - lo)
    if mid >= hi:
        mid, count_mid = (lo + hi) / 2, count_hi
    if count_mid != count_lo:
        _locate(path, lo, count_lo, mid, count_mid, out)
    if count_mid != count_hi:
        _locate(path, mid, count_mid, hi, count_hi, out)


def spectral_flow_crossings(path: MatrixPath, samples: int = 64) -> SpectralFlowResult:
    """u ∈ [0,1] を samples 等分して負の固有値の個数の変化を追い、変化した区間は二分して通過点を求める

    Raises:
        EndpointKernelError: 端点で固有値が0にある場合
        ValueError: samples < 1 の場合
    """
    if samples < 1:
        msg = f"samples must be >= 1, got {samples}"
        raise ValueError(msg)
    for u in (0.0, 1.0):
        smallest = _smallest_magnitude(path(u))
        if smallest <= KERNEL_TOLERANCE:
            msg = f"eigenvalue {smallest:.3g} at the endpoint u={u} is pinned at zero"
            raise EndpointKernelError(msg, u=u, eigenvalue=smallest)

    step = 1.0 / samples
    grid = [(0.0, negative_count(path(0.0)))]
    for k in range(1, samples):
        grid.append(_interior_count(path, k * step, step))
    grid.append((1.0, negative_count(path(1.0))))

    crossings: list[Crossing] = []
    for (lo, count_lo), (hi, count_hi) in zip(grid, grid[1:], strict=False):
        if count_lo != count_hi:
            _locate(path, lo, count_lo, hi, count_hi, crossings)
    flow = sum(c.direction * c.multiplicity for c in crossings)
    logger.info("spectral flow %d from %d crossings", flow, len(crossings))
    return SpectralFlowResult(samples=samples, crossings=crossings, flow=flow, endpoint_negative_counts=(grid[0][1], grid[-1][1]))


class SpectralFlowIntegral(BaseModel):
    """√t/√π ∫₀¹ Tr(Ḋ_u e^{−tD_u²}) du の値"""

    scale: float
    value: float
    error_estimate: float

    model_config = {"frozen": True}


def _as_path(source: OddFredholmModule | LinearPath) -> LinearPath:
    return conjugation_path(source) if isinstance(source, OddFredholmModule) else source


def spectral_flow_integral(source: OddFredholmModule | LinearPath, scale: float = 1.0) -> SpectralFlowIntegral:
    """熱核によるスペクトルフローの積分表示を適応求積で評価する

    Args:
        source: 奇加群（D から g⁻¹Dg への道を使う）または線形な道
        scale: 熱核のスケール t

    Raises:
        ValueError: t が正でない場合
        QuadratureError: 求積の誤差推定が大きすぎる場合
    """
    if scale <= 0:
        msg = f"scale must be > 0, got {scale}"
        raise ValueError(msg)
    path = _as_path(source)
    velocity = path.velocity

    def integrand(u: float) -> float:
        kernel = heat_kernel(Spectrum.of(path.at(u), "D_u"), scale)
        return float(np.trace(velocity @ kernel).real)

    if not np.any(velocity):
        return SpectralFlowIntegral(scale=scale, value=0.0, error_estimate=0.0)
    integral, error = quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-12, limit=200)
    if error > INTEGRAL_ERROR_LIMIT:
        msg = f"spectral flow integral at t={scale} has error estimate {error:.3g}"
        raise QuadratureError(msg, achieved_error=error)
    factor = math.sqrt(scale / math.pi)
    return SpectralFlowIntegral(scale=scale, value=factor * integral, error_estimate=factor * error)


class SweepEntry(BaseModel):
    """スケール t での積分値と通過数との差"""

    scale: float
    value: float
    gap: float

    model_config = {"frozen": True}


class SpectralFlowSweep(BaseModel):
    """通過数と、スケールを変えた積分値の比較"""

    crossings: SpectralFlowResult
    entries: list[SweepEntry]

    model_config = {"frozen": True}

    @property
    def final_gap(self) -> float:
        """最大スケールでの |積分値 − 通過数|"""
        return self.entries[-1].gap if self.entries else 0.0


def spectral_flow_sweep(source: OddFredholmModule | LinearPath, scales: Sequence[float] | None = None, settings: FredholmSettings | None = None) -> SpectralFlowSweep:
    """通過数を数え、各スケールの積分値との差を並べる"""
    settings = settings or FredholmSettings()
    scales = settings.spectral_flow_scales if scales is None else scales
    path = _as_path(source)
    result = spectral_flow_crossings(path, settings.spectral_flow_samples)
    entries = []
    for t in scales:
        value = spectral_flow_integral(path, t).value
        entries.append(SweepEntry(scale=t, value=value, gap=abs(value - result.flow)))
        logger.debug("t=%g: integral %.12g vs flow %d", t, value, result.flow)
    return SpectralFlowSweep(crossings=result, entries=entries)
