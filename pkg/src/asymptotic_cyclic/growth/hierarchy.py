"""漸近的成長階層 E(y_n) の有限区間判定"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from pydantic import BaseModel, Field

from asymptotic_cyclic.config.app import GrowthSettings
from asymptotic_cyclic.growth.exceptions import PrefixTooShortError
from asymptotic_cyclic.growth.models import EntireVerdict, GrowthSequence, GrowthVerdict, RadiusVerdict, Relation, log_positive

logger = logging.getLogger(__name__)

LOG10 = math.log(10.0)


def tail_window(prefix_length: int) -> range:
    """末尾窓 [N − ⌊N/4⌋, N] の添字範囲"""
    return range(prefix_length - prefix_length // 4, prefix_length + 1)


def _require_prefix(prefix_length: int, *sequences: GrowthSequence) -> None:
    available = min(s.max_index for s in sequences)
    if prefix_length > available:
        msg = f"Prefix length {prefix_length} exceeds computed terms ({available})"
        raise PrefixTooShortError(msg, required=prefix_length, available=available)


def log_ratio(x: GrowthSequence, y: GrowthSequence, prefix_length: int) -> list[float]:
    """log(x_n/y_n) for 0 ≤ n ≤ N"""
    _require_prefix(prefix_length, x, y)
    return [x.log_terms[n] - y.log_terms[n] for n in range(prefix_length + 1)]


def _radius_verdict(logs: Sequence[float], radius: float, settings: GrowthSettings) -> RadiusVerdict:
    prefix_length = len(logs) - 1
    log_r = math.log(radius)
    scaled = [math.fsum([n * log_r, value]) for n, value in enumerate(logs)]

    window = tail_window(prefix_length)
    tail = [scaled[n] for n in window]
    tail_sup = max(tail)
    decreasing = all(b < a for a, b in zip(tail, tail[1:], strict=False))

    # 発散の証拠: 末尾窓の中で閾値を超え、直前の窓で狭義単調増加し、N まで閾値を下回らない
    log_threshold = math.log(settings.divergence_threshold)
    w = settings.monotone_window
    for n in range(max(window.start, w - 1), prefix_length + 1):
        if min(scaled[n:]) <= log_threshold:
            continue
        segment = scaled[n - w + 1 : n + 1]
        if all(b > a for a, b in zip(segment, segment[1:], strict=False)):
            return RadiusVerdict(
                radius=radius,
                relation=Relation.VIOLATED,
                witness_index=n,
                tail_start=window.start,
                tail_sup_log10=tail_sup / LOG10,
                tail_decreasing=decreasing,
            )

    if tail_sup < 0.0 and decreasing:
        relation = Relation.HOLDS
    else:
        relation = Relation.UNDETERMINED
    return RadiusVerdict(
        radius=radius,
        relation=relation,
        tail_start=window.start,
        tail_sup_log10=tail_sup / LOG10,
        tail_decreasing=decreasing,
    )


def precedes_prefix(
    x: GrowthSequence,
    y: GrowthSequence,
    radii: Sequence[float],
    prefix_length: int,
    settings: GrowthSettings | None = None,
) -> GrowthVerdict:
    """(x_n) ≺ (y_n) を有限区間 0..N で判定する

    各半径 r について rⁿx_n/y_n を対数空間で評価する。末尾窓で 1 未満かつ狭義単調減少なら
    holds_on_prefix、閾値超えの単調増加が見つかれば violated_at(r, n)、どちらでもなければ
    undetermined_on_prefix とする。

    Args:
        x: 比較される数列
        y: 基準の数列
        radii: 試す半径 r > 0
        prefix_length: 有限区間の最大添字 N
        settings: 閾値設定

    Returns:
        GrowthVerdict: 判定結果

    Raises:
        ValueError: 半径が空または正でない場合
        PrefixTooShortError: N が計算済みの項を超える場合
    """
    settings = settings or GrowthSettings()
    if not radii:
        msg = "radii must not be empty"
        raise ValueError(msg)
    if any(r <= 0 for r in radii):
        msg = f"radii must be positive: {list(radii)}"
        raise ValueError(msg)

    logs = log_ratio(x, y, prefix_length)
    details = [_radius_verdict(logs, float(r), settings) for r in radii]

    violated = next((d for d in details if d.relation == Relation.VIOLATED), None)
    if violated is not None:
        logger.debug("%s ≺ %s violated at r=%s, n=%s", x.label, y.label, violated.radius, violated.witness_index)
        return GrowthVerdict(
            relation=Relation.VIOLATED,
            probe_radii=[float(r) for r in radii],
            prefix_length=prefix_length,
            witness_radius=violated.radius,
            witness_index=violated.witness_index,
            details=details,
        )

    if all(d.relation == Relation.HOLDS for d in details):
        relation = Relation.HOLDS
    else:
        relation = Relation.UNDETERMINED
        logger.warning("%s ≺ %s undetermined on prefix N=%d", x.label, y.label, prefix_length)
    return GrowthVerdict(relation=relation, probe_radii=[float(r) for r in radii], prefix_length=prefix_length, details=details)


def nth_root_profile(x: GrowthSequence, y: GrowthSequence, prefix_length: int) -> list[float]:
    """((x_n/y_n)^{1/n})_{1≤n≤N} を対数空間で計算する"""
    if prefix_length < 1:
        msg = f"prefix_length must be >= 1, got {prefix_length}"
        raise ValueError(msg)
    logs = log_ratio(x, y, prefix_length)
    return [math.exp(logs[n] / n) for n in range(1, prefix_length + 1)]


def _radius_from_logs(logs: Sequence[float], prefix_length: int, root_floor: float) -> float:
    if prefix_length < 8:
        msg = f"radius estimate needs N >= 8, got {prefix_length}"
        raise PrefixTooShortError(msg, required=8, available=prefix_length)
    if len(logs) <= prefix_length:
        msg = f"Prefix length {prefix_length} exceeds computed terms ({len(logs) - 1})"
        raise PrefixTooShortError(msg, required=prefix_length, available=len(logs) - 1)

    # 後半 N/2 個の添字での n 乗根の最大値を limsup の推定とする
    roots = [math.exp(logs[n] / n) if logs[n] != -math.inf else 0.0 for n in range(prefix_length // 2 + 1, prefix_length + 1)]
    estimate = max(roots)
    if estimate < root_floor:
        return math.inf
    return 1.0 / estimate


def radius_estimate(coeffs: GrowthSequence, prefix_length: int, root_floor: float | None = None) -> float:
    """冪級数 Σ c_n zⁿ の収束半径を末尾の n 乗根から推定する

    Args:
        coeffs: 係数列
        prefix_length: 使う最大添字 N（8以上）
        root_floor: これを下回る n 乗根は 0 とみなし無限大を返す

    Returns:
        float: 収束半径の推定値（entire なら math.inf）
    """
    floor = GrowthSettings().root_floor if root_floor is None else root_floor
    return _radius_from_logs(coeffs.log_terms, prefix_length, floor)


def _entire_weights(norms: Sequence[float | Fraction], parity: int) -> list[float]:
    logs = []
    for n, value in enumerate(norms):
        if value == 0:
            logs.append(-math.inf)
            continue
        factorial = math.lgamma(2 * n + 1 + parity) - math.lgamma(n + 1)
        logs.append(log_positive(value, n) + factorial)
    return logs


def entire_test(norms: Sequence[float | Fraction], parity: int, prefix_length: int, settings: GrowthSettings | None = None) -> EntireVerdict:
    """ノルム列 ‖φ_{2n+i}‖ から entire 性を判定する

    係数 (2n+i)!‖φ_{2n+i}‖/n! の収束半径推定が閾値を超えれば entire-consistent。

    Args:
        norms: n 番目が ‖φ_{2n+parity}‖ のノルム列
        parity: 0（偶）または 1（奇）
        prefix_length: 使う最大添字 N
        settings: 閾値設定

    Returns:
        EntireVerdict: 判定結果
    """
    settings = settings or GrowthSettings()
    if parity not in (0, 1):
        msg = f"parity must be 0 or 1, got {parity}"
        raise ValueError(msg)
    logs = _entire_weights(norms, parity)
    radius = _radius_from_logs(logs, prefix_length, settings.root_floor)
    return EntireVerdict(
        parity=parity,
        prefix_length=prefix_length,
        radius=radius,
        threshold=settings.entire_threshold,
        entire_consistent=radius > settings.entire_threshold,
    )


class GrowthClassification(BaseModel):
    """growth-classify コマンドの結果"""

    x_label: str
    y_label: str
    verdict: GrowthVerdict
    root_profile: list[float]
    root_tail_max: float = Field(..., description="末尾窓での n 乗根の最大値")
    radius: float = Field(..., description="x_n/y_n を係数とする冪級数の収束半径推定")

    model_config = {"frozen": True, "ser_json_inf_nan": "strings"}


def classify_sequence(
    x: GrowthSequence,
    y: GrowthSequence,
    radii: Sequence[float],
    prefix_length: int,
    settings: GrowthSettings | None = None,
) -> GrowthClassification:
    """≺ 判定・n 乗根プロファイル・収束半径をまとめて返す"""
    settings = settings or GrowthSettings()
    verdict = precedes_prefix(x, y, radii, prefix_length, settings)
    profile = nth_root_profile(x, y, prefix_length)
    window = tail_window(prefix_length)
    logs = log_ratio(x, y, prefix_length)
    radius = _radius_from_logs(logs, prefix_length, settings.root_floor) if prefix_length >= 8 else math.nan
    return GrowthClassification(
        x_label=x.label,
        y_label=y.label,
        verdict=verdict,
        root_profile=profile,
        root_tail_max=max(profile[n - 1] for n in window),
        radius=radius,
    )
