"""余巡回加群の抽象インターフェース"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Hashable
from fractions import Fraction

import numpy as np

from asymptotic_cyclic.cocyclic.chains import LinearCombination, Scalar
from asymptotic_cyclic.cocyclic.exceptions import DegreeMismatchError, IndexRangeError

WITNESS_LIMIT = 240


def random_rational(rng: np.random.Generator, *, nonzero: bool = False) -> Fraction:
    """小さな分母の乱数有理数"""
    while True:
        value = Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5)))
        if value != 0 or not nonzero:
            return value


class CocyclicModule[E](ABC):
    """次数ごとの空間 C^n と構造写像 d_i: C^n → C^{n+1}, s_j: C^n → C^{n-1}, t_n: C^n → C^n

    公開メソッドは添字と次数を検査してから `_coface` などの実装を呼ぶ。
    """

    name: str = "cocyclic-module"
    exact: bool = True
    tolerance: float = 1e-12

    def coface(self, i: int, n: int, x: E) -> E:
        """d_i: C^n → C^{n+1}（0 ≤ i ≤ n+1）"""
        if not 0 <= i <= n + 1:
            msg = f"coface index {i} out of range for degree {n}"
            raise IndexRangeError(msg, name="d", index=i, degree=n)
        self.validate(n, x)
        return self._coface(i, n, x)

    def codegeneracy(self, j: int, n: int, x: E) -> E:
        """s_j: C^n → C^{n-1}（0 ≤ j ≤ n-1）"""
        if not 0 <= j <= n - 1:
            msg = f"codegeneracy index {j} out of range for degree {n}"
            raise IndexRangeError(msg, name="s", index=j, degree=n)
        self.validate(n, x)
        return self._codegeneracy(j, n, x)

    def cyclic(self, n: int, x: E) -> E:
        """t_n: C^n → C^n"""
        if n < 0:
            msg = f"cyclic operator needs a nonnegative degree, got {n}"
            raise IndexRangeError(msg, name="t", index=0, degree=n)
        self.validate(n, x)
        return self._cyclic(n, x)

    def validate(self, n: int, x: E) -> None:
        """x が次数 n の元であることを確かめる

        Raises:
            DegreeMismatchError: 次数が異なる場合
        """
        actual = self.degree_of(x)
        if actual is not None and actual != n:
            msg = f"{self.name}: expected an element of degree {n}, got degree {actual}"
            raise DegreeMismatchError(msg, expected=n, actual=actual)

    def equal(self, n: int, x: E, y: E) -> bool:
        """次数 n の2元が等しいか（厳密キャリアでは厳密等号）"""
        return self.is_zero(n, x - y)  # type: ignore[operator]

    def unit_scale(self, n: int) -> Scalar:
        """s_j d_i = Id（i ∈ {j, j+1}）の右辺に掛かる補正（通常は1）"""
        return 1

    def norm(self, n: int, x: E) -> Scalar | None:
        """次数 n のノルム（無ければ None）"""
        return None

    def describe(self, x: E) -> str:
        """レポート用の証拠文字列"""
        text = repr(x)
        return text if len(text) <= WITNESS_LIMIT else text[: WITNESS_LIMIT - 3] + "..."

    @abstractmethod
    def degree_of(self, x: E) -> int | None:
        """元の次数（零元など判定できなければ None）"""

    @abstractmethod
    def zero(self, n: int) -> E:
        """次数 n の零元"""

    @abstractmethod
    def is_zero(self, n: int, x: E) -> bool:
        """次数 n の元が零か"""

    @abstractmethod
    def sample(self, n: int, rng: np.random.Generator) -> E:
        """恒等式検査用のランダムな元"""

    @abstractmethod
    def _coface(self, i: int, n: int, x: E) -> E: ...

    @abstractmethod
    def _codegeneracy(self, j: int, n: int, x: E) -> E: ...

    @abstractmethod
    def _cyclic(self, n: int, x: E) -> E: ...


class BasisCocyclicModule[K: Hashable](CocyclicModule[LinearCombination[K]]):
    """構造写像が基底元ごとに与えられる加群（元は基底の有限線形結合）"""

    @abstractmethod
    def basis_degree(self, key: K) -> int:
        """基底元の次数"""

    @abstractmethod
    def coface_basis(self, i: int, n: int, key: K) -> LinearCombination[K]:
        """基底元への d_i"""

    @abstractmethod
    def codegeneracy_basis(self, j: int, n: int, key: K) -> LinearCombination[K]:
        """基底元への s_j"""

    @abstractmethod
    def cyclic_basis(self, n: int, key: K) -> LinearCombination[K]:
        """基底元への t_n"""

    @abstractmethod
    def sample_basis(self, n: int, rng: np.random.Generator) -> K:
        """ランダムな基底元"""

    def degree_of(self, x: LinearCombination[K]) -> int | None:
        degrees = {self.basis_degree(k) for k in x.support()}
        if not degrees:
            return None
        if len(degrees) > 1:
            msg = f"{self.name}: mixed degrees {sorted(degrees)} in one element"
            raise DegreeMismatchError(msg, expected=min(degrees), actual=max(degrees))
        return degrees.pop()

    def zero(self, n: int) -> LinearCombination[K]:
        return LinearCombination()

    def is_zero(self, n: int, x: LinearCombination[K]) -> bool:
        if self.exact:
            return not x
        return all(abs(c) <= self.tolerance for _, c in x.items())

    def norm(self, n: int, x: LinearCombination[K]) -> Scalar:
        return x.l1_norm()

    def sample(self, n: int, rng: np.random.Generator, size: int = 3) -> LinearCombination[K]:
        return LinearCombination((self.sample_basis(n, rng), random_rational(rng, nonzero=True)) for _ in range(size))

    def _coface(self, i: int, n: int, x: LinearCombination[K]) -> LinearCombination[K]:
        return x.map_linear(lambda key: self.coface_basis(i, n, key))

    def _codegeneracy(self, j: int, n: int, x: LinearCombination[K]) -> LinearCombination[K]:
        return x.map_linear(lambda key: self.codegeneracy_basis(j, n, key))

    def _cyclic(self, n: int, x: LinearCombination[K]) -> LinearCombination[K]:
        return x.map_linear(lambda key: self.cyclic_basis(n, key))
