"""統合Config クラス"""

import logging
from pathlib import Path

from pydantic import BaseModel, Field

from asymptotic_cyclic.config.app import AppConfig, FredholmSettings, GrowthSettings, QuadratureSettings, load_app_config
from asymptotic_cyclic.config.env import load_env_config

DEFAULT_CONFIG_PATH = Path("config.yaml")

logger = logging.getLogger(__name__)


class Config(BaseModel):
    """統合設定クラス（環境変数 + アプリケーション設定）"""

    # 環境変数由来
    log_level: str = Field(default="INFO", description="ログレベル名")
    config_path: Path | None = Field(default=None, description="実際に読み込んだ設定ファイル")

    # config.yaml由来
    seed: int = Field(default=0, ge=0, description="乱択スイートの乱数シード")
    growth: GrowthSettings = Field(default_factory=GrowthSettings)
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)
    fredholm: FredholmSettings = Field(default_factory=FredholmSettings)

    model_config = {"extra": "forbid", "frozen": True}


def load_config(config_path: Path | None = None) -> Config:
    """環境変数とYAMLファイルから統合設定を読み込む

    パスの優先順位は 引数 > 環境変数 ASYMPTOTIC_CYCLIC_CONFIG > ./config.yaml。
    既定パスにファイルが無い場合だけはデフォルト値で続行する。

    Args:
        config_path: YAMLファイルのパス

    Returns:
        Config: 統合設定

    Raises:
        FileNotFoundError: 明示されたYAMLファイルが存在しない場合
        ValueError: YAMLまたは環境変数が不正な場合
    """
    env_config = load_env_config()

    path = config_path
    if path is None and env_config.config_path is not None:
        path = Path(env_config.config_path)

    if path is None and not DEFAULT_CONFIG_PATH.exists():
        logger.info("Config file not found, using defaults: %s", DEFAULT_CONFIG_PATH)
        app_config = AppConfig()
    else:
        path = path or DEFAULT_CONFIG_PATH
        app_config = load_app_config(path)

    return Config(
        log_level=env_config.log_level,
        config_path=path,
        seed=app_config.seed,
        growth=app_config.growth,
        quadrature=app_config.quadrature,
        fredholm=app_config.fredholm,
    )
