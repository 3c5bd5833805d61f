"""成長階層の判定に関する例外"""


class GrowthError(Exception):
    """成長階層関連のエラーの基底クラス"""


class NonPositiveTermError(GrowthError):
    """数列に正でない項が含まれる場合のエラー"""

    def __init__(self, message: str, index: int, value: float) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            index: 問題の添字 n
            value: 問題の項の値
        """
        super().__init__(message)
        self.index = index
        self.value = value


class PrefixTooShortError(GrowthError):
    """判定に必要な長さの有限区間が無い場合のエラー"""

    def __init__(self, message: str, required: int, available: int) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            required: 必要な最大添字
            available: 利用可能な最大添字
        """
        super().__init__(message)
        self.required = required
        self.available = available
