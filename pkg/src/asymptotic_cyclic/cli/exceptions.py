"""コマンドライン実行に関する例外"""

from pathlib import Path


class CliError(Exception):
    """コマンドライン関連のエラーの基底クラス"""


class ReportWriteError(CliError):
    """レポートを書き出せない場合のエラー"""

    def __init__(self, message: str, path: Path | None) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            path: 書き出し先（標準出力なら None）
        """
        super().__init__(message)
        self.path = path


class InputSpecError(CliError):
    """入力 JSON の形が不正な場合のエラー"""
