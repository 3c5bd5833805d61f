import os
from collections.abc import Iterator
from pathlib import Path
from unittest.mock import patch

import pytest


@pytest.fixture(autouse=True)
def isolated_env(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """環境変数と作業ディレクトリを切り離す（既定の config.yaml を読まない）"""
    monkeypatch.chdir(tmp_path)
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture
def emit(tmp_path: Path) -> Path:
    """レポートの書き出し先"""
    return tmp_path / "report.json"
