"""設定管理モジュール"""

from asymptotic_cyclic.config.app import AppConfig, FredholmSettings, GrowthSettings, QuadratureSettings, load_app_config
from asymptotic_cyclic.config.config import Config, load_config
from asymptotic_cyclic.config.env import EnvConfig, load_env_config

__all__ = [
    "AppConfig",
    "Config",
    "EnvConfig",
    "FredholmSettings",
    "GrowthSettings",
    "QuadratureSettings",
    "load_app_config",
    "load_config",
    "load_env_config",
]
