"""単体加群に関する例外"""


class SimplexError(Exception):
    """単体加群関連のエラーの基底クラス"""


class NonMonotonePointError(SimplexError):
    """座標が 0 ≤ t₁ ≤ … ≤ t_n ≤ 1 を満たさない場合のエラー"""

    def __init__(self, message: str, coords: tuple[object, ...]) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            coords: 与えられた座標
        """
        super().__init__(message)
        self.coords = coords
