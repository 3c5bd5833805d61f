"""統合Config クラスのテスト"""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from asymptotic_cyclic.config import Config, load_config


class TestConfig:
    """Configクラスのテスト"""

    def test_config_has_default_values(self) -> None:
        """Configがデフォルト値を持つこと"""
        config = Config()
        assert config.log_level == "INFO"
        assert config.seed == 0
        assert config.growth.entire_threshold == 10.0


class TestLoadConfig:
    """load_config関数のテスト"""

    def test_load_config_from_env_and_yaml(self, tmp_path: Path) -> None:
        """環境変数とYAMLファイルから設定を読み込むこと"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text("seed: 11\nquadrature:\n  tolerance: 1.0e-8\n")

        with patch.dict(os.environ, {"ASYMPTOTIC_CYCLIC_LOG_LEVEL": "DEBUG"}, clear=False):
            config = load_config(config_file)

        assert config.log_level == "DEBUG"
        assert config.seed == 11
        assert config.quadrature.tolerance == 1e-8
        assert config.config_path == config_file

    def test_env_path_is_used_when_argument_missing(self, tmp_path: Path) -> None:
        """引数が無ければ環境変数のパスを使うこと"""
        config_file = tmp_path / "env.yaml"
        config_file.write_text("seed: 5\n")

        with patch.dict(os.environ, {"ASYMPTOTIC_CYCLIC_CONFIG": str(config_file)}, clear=True):
            config = load_config()

        assert config.seed == 5

    def test_defaults_when_default_file_missing(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """既定のconfig.yamlが無い場合はデフォルト値になること"""
        monkeypatch.chdir(tmp_path)
        with patch.dict(os.environ, {}, clear=True):
            config = load_config()

        assert config.seed == 0
        assert config.config_path is None

    def test_load_config_with_empty_yaml_fails(self, tmp_path: Path) -> None:
        """YAMLファイルが空の場合にエラーになること"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text("")

        with pytest.raises(ValueError, match="Config file is empty"):
            load_config(config_file)

    def test_load_config_fails_when_yaml_not_found(self) -> None:
        """明示したYAMLファイルが存在しない場合にエラーになること"""
        with pytest.raises(FileNotFoundError):
            load_config(Path("nonexistent.yaml"))
