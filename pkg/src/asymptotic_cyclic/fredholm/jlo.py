"""JLO 括弧 ⟨a₀, …, aₙ⟩ = ∫_{Δⁿ} Str(a₀e(t₁)a₁e(t₂−t₁)…aₙe(1−tₙ)) dt"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from functools import lru_cache
from typing import Literal

import mpmath
import numpy as np
from pydantic import BaseModel
from scipy.linalg import expm

from asymptotic_cyclic.config.app import FredholmSettings, QuadratureSettings
from asymptotic_cyclic.fredholm.exceptions import QuadratureError
from asymptotic_cyclic.fredholm.heat import check_square
from asymptotic_cyclic.fredholm.module import EvenFredholmModule

logger = logging.getLogger(__name__)

JloMode = Literal["exact", "quadrature", "block"]

SNAP_TOLERANCE = 1e-12
MAX_GAUSS_NODES = 48
MONTE_CARLO_BATCH = 20_000


class JloEvaluation(BaseModel):
    """JLO 括弧の評価値と誤差推定"""

    mode: JloMode
    method: str
    degree: int
    value: tuple[float, float]
    error_estimate: float
    converged: bool

    model_config = {"frozen": True}

    @property
    def complex_value(self) -> complex:
        """評価値"""
        return complex(*self.value)


@lru_cache(maxsize=1 << 16)
def _simplex_exponential(mus: tuple[float, ...], digits: int) -> mpmath.mpf:
    # ∫_{Δⁿ} exp(−Σ g_k μ_k) dg は exp(−·) の差分商に (−1)ⁿ を掛けたもの
    with mpmath.workdps(digits):
        n = len(mus) - 1
        if mus[0] == mus[-1]:
            return mpmath.exp(-mpmath.mpf(mus[0])) / mpmath.factorial(n)
        head = _simplex_exponential(mus[:-1], digits)
        tail = _simplex_exponential(mus[1:], digits)
        return (head - tail) / (mpmath.mpf(mus[-1]) - mpmath.mpf(mus[0]))


def simplex_exponential(mus: Sequence[float], digits: int = 60) -> float:
    """∫_{Δⁿ} exp(−Σ_k g_k μ_k) dg（g は和が1の間隔、体積 1/n!）

    昇順に並べて差分商の漸化式で計算し、全て等しいときは e^{−μ}/n! を使う。
    """
    if not mus:
        msg = "at least one exponent is required"
        raise ValueError(msg)
    return float(_simplex_exponential(tuple(sorted(float(m) for m in mus)), digits))


def _snap(values: np.ndarray) -> np.ndarray:
    snapped = np.array(values, dtype=float)
    order = np.argsort(snapped)
    anchor = snapped[order[0]]
    for i in order[1:]:
        if abs(snapped[i] - anchor) <= SNAP_TOLERANCE * max(1.0, abs(anchor)):
            snapped[i] = anchor
        else:
            anchor = snapped[i]
    return snapped


def _prepare(fm: EvenFredholmModule, args: Sequence[np.ndarray]) -> tuple[np.ndarray, list[np.ndarray], np.ndarray]:
    if not args:
        msg = "jlo_bracket needs at least a_0"
        raise ValueError(msg)
    for a in args:
        check_square(a, fm.dim)
    spectrum = fm.spectrum
    mus = _snap(spectrum.eigenvalues**2)
    tilde = [spectrum.to_eigenbasis(a) for a in args]
    first = spectrum.to_eigenbasis(fm.grading) @ tilde[0]
    return first, tilde[1:], mus


def _exact(fm: EvenFredholmModule, args: Sequence[np.ndarray], digits: int) -> complex:
    first, rest, mus = _prepare(fm, args)
    n = len(rest)
    dim = fm.dim
    total = 0j
    for idx in itertools.product(range(dim), repeat=n + 1):
        coeff = first[idx[-1], idx[0]]
        for k in range(n):
            if coeff == 0:
                break
            coeff *= rest[k][idx[k], idx[k + 1]]
        if coeff == 0:
            continue
        total += coeff * simplex_exponential([mus[i] for i in idx], digits)
    return total


def _integrand(first: np.ndarray, rest: list[np.ndarray], mus: np.ndarray, gaps: np.ndarray) -> np.ndarray:
    # gaps: (標本数, n+1)。固有基底では e(g) は対角行列
    x = first[None, :, :] * np.exp(-gaps[:, 0, None] * mus[None, :])[:, None, :]
    for k, a in enumerate(rest, start=1):
        x = (x @ a) * np.exp(-gaps[:, k, None] * mus[None, :])[:, None, :]
    return np.trace(x, axis1=1, axis2=2)


def _gauss(first: np.ndarray, rest: list[np.ndarray], mus: np.ndarray, nodes: int) -> complex:
    n = len(rest)
    x, w = np.polynomial.legendre.leggauss(nodes)
    x = (x + 1.0) / 2.0
    w = w / 2.0
    grid = np.array(list(itertools.product(range(nodes), repeat=n)))
    u = x[grid]
    weights = np.prod(w[grid], axis=1)
    # t_n = u_n、t_k = u_k t_{k+1}（立方体から順序付き単体への写像）、ヤコビアン Π u_k^{k−1}
    t = np.flip(np.cumprod(np.flip(u, axis=1), axis=1), axis=1)
    jacobian = np.prod(u ** np.arange(n)[None, :], axis=1)
    gaps = np.diff(np.concatenate([np.zeros((len(t), 1)), t, np.ones((len(t), 1))], axis=1), axis=1)
    return complex(np.sum(weights * jacobian * _integrand(first, rest, mus, gaps)))


def _monte_carlo(first: np.ndarray, rest: list[np.ndarray], mus: np.ndarray, samples: int, seed: int) -> tuple[complex, float]:
    n = len(rest)
    rng = np.random.default_rng(seed)
    values = []
    remaining = samples
    while remaining > 0:
        size = min(MONTE_CARLO_BATCH, remaining)
        t = np.sort(rng.random((size, n)), axis=1)
        gaps = np.diff(np.concatenate([np.zeros((size, 1)), t, np.ones((size, 1))], axis=1), axis=1)
        values.append(_integrand(first, rest, mus, gaps))
        remaining -= size
    f = np.concatenate(values)
    volume = 1.0 / math.factorial(n)
    error = volume * float(np.std(f)) / math.sqrt(len(f))
    return complex(volume * np.mean(f)), error


def _quadrature(fm: EvenFredholmModule, args: Sequence[np.ndarray], settings: QuadratureSettings, seed: int) -> tuple[complex, float, str, bool]:
    first, rest, mus = _prepare(fm, args)
    n = len(rest)
    if n == 0:
        return complex(np.sum(np.diag(first) * np.exp(-mus))), 0.0, "closed-form", True
    if n > settings.max_iterated_degree:
        logger.warning("degree %d exceeds the iterated Gauss limit %d, falling back to Monte Carlo", n, settings.max_iterated_degree)
        value, error = _monte_carlo(first, rest, mus, settings.monte_carlo_samples, seed)
        return value, error, "monte-carlo", error <= settings.tolerance

    nodes = settings.nodes_per_axis
    coarse = _gauss(first, rest, mus, nodes)
    while True:
        fine = _gauss(first, rest, mus, 2 * nodes)
        error = abs(fine - coarse)
        if error <= settings.tolerance:
            return fine, error, "gauss-legendre", True
        if 2 * nodes >= MAX_GAUSS_NODES:
            msg = f"Gauss quadrature of degree {n} did not reach tolerance {settings.tolerance} (error {error:.3g})"
            raise QuadratureError(msg, achieved_error=error)
        nodes, coarse = 2 * nodes, fine
        logger.warning("Gauss error %.3g above tolerance, comparing %d against %d nodes per axis next", error, nodes, 2 * nodes)


def _block(fm: EvenFredholmModule, args: Sequence[np.ndarray]) -> complex:
    for a in args:
        check_square(a, fm.dim)
    n = len(args) - 1
    d = fm.dim
    big = np.zeros(((n + 1) * d, (n + 1) * d), dtype=complex)
    minus_square = -(fm.dirac @ fm.dirac)
    for k in range(n + 1):
        big[k * d : (k + 1) * d, k * d : (k + 1) * d] = minus_square
        if k < n:
            big[k * d : (k + 1) * d, (k + 1) * d : (k + 2) * d] = args[k + 1]
    # 右上のブロックが ∫ e(t₁)a₁e(t₂−t₁)…aₙe(1−tₙ)
    corner = expm(big)[:d, n * d :]
    return fm.supertrace(args[0] @ corner)


def jlo_evaluate(
    fm: EvenFredholmModule,
    args: Sequence[np.ndarray],
    mode: JloMode = "exact",
    quadrature: QuadratureSettings | None = None,
    settings: FredholmSettings | None = None,
    seed: int = 0,
) -> JloEvaluation:
    """JLO 括弧を指定の方法で評価し、誤差推定を付けて返す

    Args:
        fm: 偶 Fredholm 加群
        args: a₀, …, aₙ
        mode: "exact"（固有基底展開と差分商）、"quadrature"（反復 Gauss 則、高次はモンテカルロ）、
            "block"（ブロック二重対角行列の指数関数）
        quadrature: 数値積分設定
        settings: 差分商の精度などの設定
        seed: モンテカルロの乱数シード

    Returns:
        JloEvaluation: 評価値と誤差推定

    Raises:
        QuadratureError: 反復 Gauss 則が目標誤差に届かない場合
        DimensionMismatchError: 行列の形が合わない場合
    """
    quadrature = quadrature or QuadratureSettings()
    settings = settings or FredholmSettings()
    degree = len(args) - 1
    if mode == "exact":
        value, error, method, converged = _exact(fm, args, settings.divided_difference_digits), 0.0, "eigen-expansion", True
    elif mode == "quadrature":
        value, error, method, converged = _quadrature(fm, args, quadrature, seed)
    elif mode == "block":
        value, error, method, converged = _block(fm, args), 0.0, "van-loan", True
    else:
        msg = f"unknown JLO mode: {mode}"
        raise ValueError(msg)
    if not converged:
        logger.warning("JLO bracket of degree %d: %s error estimate %.3g above tolerance", degree, method, error)
    return JloEvaluation(mode=mode, method=method, degree=degree, value=(value.real, value.imag), error_estimate=error, converged=converged)


def jlo_bracket(
    fm: EvenFredholmModule,
    args: Sequence[np.ndarray],
    mode: JloMode = "exact",
    quadrature: QuadratureSettings | None = None,
    settings: FredholmSettings | None = None,
    seed: int = 0,
) -> complex:
    """⟨a₀, …, aₙ⟩（jlo_evaluate の値だけを返す）"""
    return jlo_evaluate(fm, args, mode, quadrature, settings, seed).complex_value
