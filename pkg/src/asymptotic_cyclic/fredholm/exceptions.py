"""Fredholm 加群と指数ペアリングに関する例外"""


class FredholmError(Exception):
    """Fredholm 加群関連のエラーの基底クラス"""


class ModuleSpecError(FredholmError):
    """加群の仕様（JSON）が不正な場合のエラー"""


class DimensionMismatchError(FredholmError):
    """行列の形が加群の次元と合わない場合のエラー"""

    def __init__(self, message: str, expected: tuple[int, ...], actual: tuple[int, ...]) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            expected: 期待した形
            actual: 実際の形
        """
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class HypothesisError(FredholmError):
    """定理の仮定（自己共役性、冪等性、[D,p] = 0 など）が満たされない場合のエラー"""

    def __init__(self, message: str, name: str, defect: float) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            name: 満たされない仮定の名前
            defect: 仮定からのずれ（ノルム）
        """
        super().__init__(message)
        self.name = name
        self.defect = defect


class IndexRoundingError(HypothesisError):
    """指数の値が整数からガード幅以上離れている場合のエラー"""

    def __init__(self, message: str, value: float) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            value: 丸める前の値
        """
        super().__init__(message, name="integer index", defect=abs(value - round(value)))
        self.value = value


class EndpointKernelError(HypothesisError):
    """道の端点で固有値が0にある場合のエラー"""

    def __init__(self, message: str, u: float, eigenvalue: float) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            u: 端点のパラメータ（0 または 1）
            eigenvalue: 0に近い固有値
        """
        super().__init__(message, name="invertible endpoint", defect=abs(eigenvalue))
        self.u = u
        self.eigenvalue = eigenvalue


class QuadratureError(FredholmError):
    """数値積分が目標誤差に収束しない場合のエラー"""

    def __init__(self, message: str, achieved_error: float) -> None:
        """初期化

        Args:
            message: エラーメッセージ
            achieved_error: 到達した誤差推定
        """
        super().__init__(message)
        self.achieved_error = achieved_error
