from pathlib import Path

import pytest
import yaml

from asymptotic_cyclic.config.app import AppConfig, GrowthSettings, QuadratureSettings, load_app_config


class TestAppConfig:
    """AppConfig Pydanticモデルのテスト"""

    def test_default_values(self) -> None:
        """デフォルト値が正しく設定されること"""
        config = AppConfig()
        assert config.seed == 0
        assert config.growth.probe_radii == [1.0, 2.0, 4.0, 8.0]
        assert config.growth.divergence_threshold == 1e6
        assert config.growth.monotone_window == 5
        assert config.quadrature.tolerance == 1e-6
        assert config.fredholm.mckean_singer_times == [0.25, 0.5, 1.0, 2.0]
        assert config.fredholm.rounding_guard == 0.1

    def test_custom_values(self) -> None:
        """カスタム値が正しく設定されること"""
        config = AppConfig(
            seed=7,
            growth=GrowthSettings(root_floor=0.1),
            quadrature=QuadratureSettings(nodes_per_axis=20),
        )
        assert config.seed == 7
        assert config.growth.root_floor == 0.1
        assert config.quadrature.nodes_per_axis == 20

    def test_reject_unknown_fields(self) -> None:
        """未知のフィールドでエラーになること"""
        with pytest.raises(ValueError):
            AppConfig(unknown_field="value")  # type: ignore[call-arg]

    def test_reject_invalid_guard(self) -> None:
        """丸めガード幅が0.5以上ならエラーになること"""
        with pytest.raises(ValueError):
            AppConfig(fredholm={"rounding_guard": 0.6})  # type: ignore[arg-type]


class TestLoadAppConfig:
    """load_app_config関数のテスト"""

    def test_load_from_yaml_file(self, tmp_path: Path) -> None:
        """YAMLファイルから正しく読み込めること"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text(
            yaml.dump({
                "seed": 3,
                "growth": {"entire_threshold": 50.0},
            })
        )

        config = load_app_config(config_file)
        assert config.seed == 3
        assert config.growth.entire_threshold == 50.0
        assert config.growth.root_floor == 0.25  # デフォルト値

    def test_load_repository_config(self) -> None:
        """リポジトリ同梱のconfig.yamlがデフォルト値と一致すること"""
        config_file = Path(__file__).resolve().parents[2] / "config.yaml"
        assert load_app_config(config_file) == AppConfig()

    def test_load_empty_yaml(self, tmp_path: Path) -> None:
        """空のYAMLファイルの場合にエラーになること"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text("")

        with pytest.raises(ValueError, match="Config file is empty"):
            load_app_config(config_file)

    def test_load_fails_when_file_not_exists(self) -> None:
        """ファイルが存在しない場合にエラーになること"""
        with pytest.raises(FileNotFoundError):
            load_app_config(Path("/nonexistent/config.yaml"))

    def test_load_fails_when_invalid_yaml(self, tmp_path: Path) -> None:
        """不正なYAMLの場合にエラーになること"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text("invalid: yaml: content:")

        with pytest.raises(ValueError):
            load_app_config(config_file)

    def test_reject_unknown_fields_in_yaml(self, tmp_path: Path) -> None:
        """YAMLに未知のフィールドがある場合にエラーになること"""
        config_file = tmp_path / "config.yaml"
        config_file.write_text(
            yaml.dump({
                "seed": 1,
                "quadrature": {"unknown_field": "value"},
            })
        )

        with pytest.raises(ValueError):
            load_app_config(config_file)
