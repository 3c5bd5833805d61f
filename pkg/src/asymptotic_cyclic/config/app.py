"""アプリケーション設定"""

from pathlib import Path

import yaml
from pydantic import BaseModel, Field


class GrowthSettings(BaseModel):
    """成長階層の判定に使う閾値"""

    probe_radii: list[float] = Field(default=[1.0, 2.0, 4.0, 8.0], description="≺ 判定で試す半径 r")
    divergence_threshold: float = Field(default=1e6, gt=1.0, description="violated_at と判定する rⁿx_n/y_n の下限")
    monotone_window: int = Field(default=5, ge=2, description="発散判定で狭義単調増加を要求する添字数")
    root_floor: float = Field(default=0.25, gt=0.0, description="n乗根の推定値がこれを下回ると収束半径を無限大とみなす")
    entire_threshold: float = Field(default=10.0, gt=0.0, description="entire と判定する収束半径の下限")

    model_config = {"extra": "forbid", "frozen": True}


class QuadratureSettings(BaseModel):
    """JLO積分の数値積分設定"""

    tolerance: float = Field(default=1e-6, gt=0.0, description="目標誤差")
    nodes_per_axis: int = Field(default=12, ge=2, description="反復Gauss則の1軸あたりの節点数")
    max_iterated_degree: int = Field(default=3, ge=1, description="反復Gauss則を使う最大次数（超えるとモンテカルロ）")
    monte_carlo_samples: int = Field(default=200_000, ge=1000, description="モンテカルロのサンプル数")

    model_config = {"extra": "forbid", "frozen": True}


class FredholmSettings(BaseModel):
    """Fredholm加群の数値判定設定"""

    mckean_singer_times: list[float] = Field(default=[0.25, 0.5, 1.0, 2.0], description="McKean-Singer の t 非依存性を確認する時刻")
    t_independence_tolerance: float = Field(default=1e-10, gt=0.0, description="t 非依存性の許容誤差")
    rounding_guard: float = Field(default=0.1, gt=0.0, lt=0.5, description="指数を整数に丸めるときのガード幅")
    commutator_tolerance: float = Field(default=1e-10, gt=0.0, description="[D,p] = 0 とみなす許容誤差")
    idempotent_tolerance: float = Field(default=1e-12, gt=0.0, description="p² = p とみなす許容誤差")
    divided_difference_digits: int = Field(default=60, ge=15, description="差分商計算の mpmath 精度（10進桁）")
    spectral_flow_samples: int = Field(default=64, ge=2, description="スペクトルフロー追跡の初期分割数")
    spectral_flow_scales: list[float] = Field(default=[1.0, 10.0, 100.0], description="スペクトルフロー積分のスケール t")

    model_config = {"extra": "forbid", "frozen": True}


class AppConfig(BaseModel):
    """アプリケーション設定"""

    seed: int = Field(default=0, ge=0, description="乱択スイートの乱数シード")
    growth: GrowthSettings = Field(default_factory=GrowthSettings)
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)
    fredholm: FredholmSettings = Field(default_factory=FredholmSettings)

    model_config = {"extra": "forbid", "frozen": True}


def load_app_config(config_path: Path) -> AppConfig:
    """YAMLファイルからAppConfigを読み込む

    Args:
        config_path: 設定ファイルのパス

    Returns:
        AppConfig: アプリケーション設定

    Raises:
        FileNotFoundError: 設定ファイルが存在しない場合
        ValueError: YAMLファイルが不正な場合
        ValidationError: 設定値が不正な場合
    """
    if not config_path.exists():
        msg = f"Config file not found: {config_path}"
        raise FileNotFoundError(msg)

    try:
        with config_path.open() as f:
            data = yaml.safe_load(f)
            if data is None:
                msg = f"Config file is empty: {config_path}"
                raise ValueError(msg)
            return AppConfig(**data)
    except yaml.YAMLError as e:
        msg = f"Invalid YAML file: {e}"
        raise ValueError(msg) from e
