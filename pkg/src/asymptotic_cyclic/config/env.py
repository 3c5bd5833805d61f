"""環境変数設定"""

import logging
import os

from pydantic import BaseModel, Field, field_validator

CONFIG_PATH_VARIABLE = "ASYMPTOTIC_CYCLIC_CONFIG"
LOG_LEVEL_VARIABLE = "ASYMPTOTIC_CYCLIC_LOG_LEVEL"


class EnvConfig(BaseModel):
    """環境変数設定"""

    config_path: str | None = Field(default=None, description="設定ファイルのパス（未指定なら config.yaml）")
    log_level: str = Field(default="INFO", description="ログレベル名")

    model_config = {"extra": "forbid"}

    @field_validator("log_level")
    @classmethod
    def _validate_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in logging.getLevelNamesMapping():
            msg = f"Unknown log level: {value}"
            raise ValueError(msg)
        return level


def load_env_config() -> EnvConfig:
    """環境変数からEnvConfigを読み込む

    Returns:
        EnvConfig: 環境変数設定

    Raises:
        ValidationError: 環境変数の値が不正な場合
    """
    return EnvConfig(
        config_path=os.environ.get(CONFIG_PATH_VARIABLE),
        log_level=os.environ.get(LOG_LEVEL_VARIABLE, "INFO"),
    )
