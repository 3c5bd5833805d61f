"""引数解析のテスト"""

from pathlib import Path

import pytest
from pydantic import ValidationError

from asymptotic_cyclic.cli import RunConfig, UsageError, build_parser, run_config_from_args
from asymptotic_cyclic.config import Config


def _run(argv: list[str], config: Config | None = None) -> RunConfig:
    return run_config_from_args(build_parser().parse_args(argv), config or Config())


class TestRunConfigFromArgs:
    """run_config_from_args関数のテスト"""

    def test_defaults(self) -> None:
        """未指定の引数は既定値になること"""
        run = _run(["verify-simplex"])
        assert run.command == "verify-simplex"
        assert run.max_even_degree == 16
        assert run.tol == 1e-6
        assert run.method == "exact"
        assert run.emit is None
        assert not run.mutate

    def test_shared_flags(self) -> None:
        """共通フラグが RunConfig に入ること"""
        run = _run(["jlo", "--spec", "index_one", "--method", "block", "--terms", "4", "--tol", "1e-9", "--radii", "1", "3", "--emit", "out.json"])
        assert run.spec == "index_one"
        assert run.method == "block"
        assert run.terms == 4
        assert run.tol == 1e-9
        assert run.radii == [1.0, 3.0]
        assert run.emit == Path("out.json")
        assert run.idempotent == "p"

    def test_seed_from_config(self) -> None:
        """--seed が無ければ設定のシード、あれば引数が優先されること"""
        config = Config(seed=9)
        assert _run(["identities"], config).seed == 9
        assert _run(["identities", "--seed", "2"], config).seed == 2

    def test_probe_radii_fallback(self) -> None:
        """--radii が無ければ設定の半径を使うこと"""
        assert _run(["growth-classify", "--spec", "g.json"]).probe_radii() == [1.0, 2.0, 4.0, 8.0]
        assert _run(["growth-classify", "--spec", "g.json", "--radii", "2"]).probe_radii() == [2.0]

    def test_terms_or(self) -> None:
        """打ち切りが無ければ既定値を返すこと"""
        assert _run(["even-index", "--spec", "balanced"]).terms_or(8) == 8
        assert _run(["even-index", "--spec", "balanced", "--terms", "0"]).terms_or(8) == 0

    def test_invalid_values(self) -> None:
        """範囲外の値は ValidationError になること"""
        with pytest.raises(ValidationError):
            _run(["verify-simplex", "--max-even-degree", "1"])
        with pytest.raises(ValidationError):
            _run(["jlo", "--spec", "index_one", "--tol", "0"])


class TestBuildParser:
    """build_parser関数のテスト"""

    def test_invalid_method(self) -> None:
        """選択肢に無い --method は UsageError になること"""
        with pytest.raises(UsageError, match="invalid choice"):
            build_parser().parse_args(["jlo", "--spec", "index_one", "--method", "simpson"])

    def test_missing_spec(self) -> None:
        """--spec が必須のコマンドで省略すると UsageError になること"""
        with pytest.raises(UsageError, match="--spec"):
            build_parser().parse_args(["even-index"])

    def test_command_required(self) -> None:
        """サブコマンドが無いと UsageError になること"""
        with pytest.raises(UsageError):
            build_parser().parse_args([])
