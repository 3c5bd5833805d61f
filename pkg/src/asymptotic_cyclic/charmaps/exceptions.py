"""特性写像の計算に関する例外"""


class CharMapError(Exception):
    """特性写像関連のエラーの基底クラス"""


class WordLengthError(CharMapError):
    """Hopf 語の長さが点の次数や引数の数と合わない場合のエラー"""

    def __init__(self, message: str, expected: int, actual: int) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            expected: 期待した長さ
            actual: 実際の長さ
        """
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class ArgumentShapeError(CharMapError):
    """行列引数の形が加群の次元と合わない場合のエラー"""

    def __init__(self, message: str, expected: tuple[int, int], actual: tuple[int, ...]) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            expected: 期待した形
            actual: 実際の形
        """
        super().__init__(message)
        self.expected = expected
        self.actual = actual
