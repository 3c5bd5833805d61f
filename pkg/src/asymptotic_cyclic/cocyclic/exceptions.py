"""余巡回加群の計算に関する例外"""


class CocyclicError(Exception):
    """余巡回加群関連のエラーの基底クラス"""


class DegreeMismatchError(CocyclicError):
    """元の次数が期待と異なる場合のエラー"""

    def __init__(self, message: str, expected: int, actual: int | None) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            expected: 期待した次数
            actual: 実際の次数（判定できない場合は None）
        """
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class IndexRangeError(CocyclicError):
    """構造写像の添字が範囲外の場合のエラー"""

    def __init__(self, message: str, name: str, index: int, degree: int) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            name: 構造写像の名前（d, s, t）
            index: 指定された添字
            degree: 適用しようとした次数
        """
        super().__init__(message)
        self.name = name
        self.index = index
        self.degree = degree


class PresentationError(CocyclicError):
    """有限表示の行列が合成できない場合のエラー"""


class NormalizationError(CocyclicError):
    """漸近正規化のノルム表が不正な場合のエラー"""
