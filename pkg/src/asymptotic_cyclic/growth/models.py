"""成長数列と判定結果のモデル"""

from __future__ import annotations

import math
from collections.abc import Sequence
from enum import StrEnum
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field

from asymptotic_cyclic.growth.exceptions import NonPositiveTermError


def log_positive(value: float | Fraction, index: int = 0) -> float:
    """正の実数または有理数の自然対数を桁あふれなしに返す

    Raises:
        NonPositiveTermError: 値が正でない場合
    """
    if value <= 0:
        msg = f"Term {index} must be positive, got {value}"
        raise NonPositiveTermError(msg, index=index, value=float(value))
    if isinstance(value, Fraction):
        # 巨大な分子分母は int のまま対数をとる
        return math.log(value.numerator) - math.log(value.denominator)
    return math.log(value)


class FactorialRatioParams(BaseModel):
    """閉じた形の生成子 c·λⁿ·Π((a·n+b)!)^e·Π(n+shift)^p のパラメータ"""

    factorials: list[tuple[int, int, float]] = Field(default_factory=list, description="[a, b, e] の組 ((a·n+b)!)^e")
    geometric: float = Field(default=1.0, gt=0.0, description="幾何因子 λ")
    poly: list[tuple[float, float]] = Field(default_factory=list, description="[shift, p] の組 (n+shift)^p")
    scale: float = Field(default=1.0, gt=0.0, description="定数倍 c")

    model_config = {"extra": "forbid", "frozen": True}

    def log_term(self, n: int) -> float:
        """n 番目の項の自然対数"""
        parts = [math.log(self.scale), n * math.log(self.geometric)]
        for a, b, e in self.factorials:
            m = a * n + b
            if m < 0:
                msg = f"Factorial argument {a}*{n}+{b} is negative"
                raise NonPositiveTermError(msg, index=n, value=float(m))
            parts.append(e * math.lgamma(m + 1))
        for shift, p in self.poly:
            base = n + shift
            if base <= 0:
                msg = f"Polynomial factor ({n}+{shift}) is not positive"
                raise NonPositiveTermError(msg, index=n, value=float(base))
            parts.append(p * math.log(base))
        return math.fsum(parts)


class GeneratorSpec(BaseModel):
    """数列の生成子仕様"""

    kind: Literal["factorial_ratio", "tabulated"]
    params: dict = Field(default_factory=dict, description="生成子のパラメータ")

    model_config = {"extra": "forbid", "frozen": True}


class GrowthSequence(BaseModel):
    """正の実数列 (x_n)_{n≥0}（対数で保持）"""

    label: str = Field(..., description="生成子を表すタグ（例: n!/(2n)!）")
    log_terms: tuple[float, ...] = Field(..., min_length=1, description="各項の自然対数")
    values: tuple[float, ...] | None = Field(default=None, description="表で与えられた場合の元の値")
    generator: GeneratorSpec | None = Field(default=None, description="閉じた形の生成子")

    model_config = {"extra": "forbid", "frozen": True}

    @property
    def max_index(self) -> int:
        """計算済みの最大添字"""
        return len(self.log_terms) - 1

    def term(self, n: int) -> float:
        """n 番目の項（表なら元の値をそのまま返す）"""
        if self.values is not None:
            return self.values[n]
        return math.exp(self.log_terms[n])

    @classmethod
    def from_terms(cls, label: str, terms: Sequence[float | Fraction]) -> GrowthSequence:
        """表で与えられた項から数列を作る

        Raises:
            NonPositiveTermError: 正でない項がある場合
        """
        logs = tuple(log_positive(v, i) for i, v in enumerate(terms))
        return cls(
            label=label,
            log_terms=logs,
            values=tuple(float(v) for v in terms),
            generator=GeneratorSpec(kind="tabulated", params={"terms": [float(v) for v in terms]}),
        )

    @classmethod
    def from_generator(cls, label: str, spec: GeneratorSpec, max_index: int) -> GrowthSequence:
        """生成子仕様から 0..max_index の項を作る"""
        if spec.kind == "tabulated":
            terms = spec.params["terms"][: max_index + 1]
            return cls.from_terms(label, terms)
        params = FactorialRatioParams(**spec.params)
        logs = tuple(params.log_term(n) for n in range(max_index + 1))
        return cls(label=label, log_terms=logs, generator=spec)

    @classmethod
    def factorial_ratio(cls, label: str, max_index: int, **params: object) -> GrowthSequence:
        """factorial_ratio 生成子の簡易コンストラクタ"""
        return cls.from_generator(label, GeneratorSpec(kind="factorial_ratio", params=params), max_index)

    def times_geometric(self, lam: float, power: float) -> GrowthSequence:
        """x_n·λⁿ·nᵃ を返す（n = 0 では nᵃ を 1 とする）"""
        logs = tuple(math.fsum([lx, n * math.log(lam), power * math.log(max(n, 1))]) for n, lx in enumerate(self.log_terms))
        return GrowthSequence(label=f"({self.label})*{lam}^n*n^{power}", log_terms=logs)

    def to_profile(self) -> dict:
        """JSON プロファイル形式 {"label", "terms"} に変換する"""
        return {"label": self.label, "terms": [self.term(n) for n in range(self.max_index + 1)]}

    @classmethod
    def from_profile(cls, data: dict) -> GrowthSequence:
        """JSON プロファイル形式から読み込む"""
        if "terms" in data:
            return cls.from_terms(data["label"], data["terms"])
        spec = GeneratorSpec(**data["generator"])
        return cls.from_generator(data["label"], spec, int(data["max_index"]))


class Relation(StrEnum):
    """≺ 関係の有限区間での判定"""

    HOLDS = "holds_on_prefix"
    VIOLATED = "violated_at"
    UNDETERMINED = "undetermined_on_prefix"


class RadiusVerdict(BaseModel):
    """1つの半径 r での判定詳細"""

    radius: float
    relation: Relation
    witness_index: int | None = Field(default=None, description="violated_at の添字 n")
    tail_start: int = Field(..., description="末尾窓の開始添字")
    tail_sup_log10: float = Field(..., description="末尾窓での rⁿx_n/y_n の上限（常用対数）")
    tail_decreasing: bool = Field(..., description="末尾窓で狭義単調減少か")

    model_config = {"frozen": True}


class GrowthVerdict(BaseModel):
    """(x_n) ≺ (y_n) の有限区間判定"""

    relation: Relation
    probe_radii: list[float]
    prefix_length: int
    witness_radius: float | None = None
    witness_index: int | None = None
    details: list[RadiusVerdict] = Field(default_factory=list)

    model_config = {"frozen": True}


class EntireVerdict(BaseModel):
    """entire 判定の結果"""

    parity: int
    prefix_length: int
    radius: float = Field(..., description="重み付き係数列の収束半径推定（inf は無限大）")
    threshold: float
    entire_consistent: bool

    model_config = {"frozen": True, "ser_json_inf_nan": "strings"}
