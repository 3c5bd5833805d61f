"""検査スイートが誤りを検出できることを確かめるための改変加群と改変作用素"""

from __future__ import annotations

from typing import Any

import numpy as np

from asymptotic_cyclic.cocyclic.chains import Scalar
from asymptotic_cyclic.cocyclic.module import CocyclicModule


class CorruptedCyclicModule[E](CocyclicModule[E]):
    """次数 degree の t_n だけを factor 倍した加群（他の構造写像はそのまま）"""

    def __init__(self, base: CocyclicModule[E], degree: int, factor: Scalar = 2) -> None:
        self.base = base
        self.degree = degree
        self.factor = factor
        self.name = f"corrupted-t{degree}({base.name})"
        self.exact = base.exact
        self.tolerance = base.tolerance

    def unit_scale(self, n: int) -> Scalar:
        return self.base.unit_scale(n)

    def norm(self, n: int, x: E) -> Scalar | None:
        return self.base.norm(n, x)

    def describe(self, x: E) -> str:
        return self.base.describe(x)

    def degree_of(self, x: E) -> int | None:
        return self.base.degree_of(x)

    def zero(self, n: int) -> E:
        return self.base.zero(n)

    def is_zero(self, n: int, x: E) -> bool:
        return self.base.is_zero(n, x)

    def sample(self, n: int, rng: np.random.Generator) -> E:
        return self.base.sample(n, rng)

    def _coface(self, i: int, n: int, x: E) -> E:
        return self.base.coface(i, n, x)

    def _codegeneracy(self, j: int, n: int, x: E) -> E:
        return self.base.codegeneracy(j, n, x)

    def _cyclic(self, n: int, x: E) -> E:
        y = self.base.cyclic(n, x)
        return y * self.factor if n == self.degree else y  # type: ignore[operator]


def unsigned_cyclic_N(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """符号を落とした N′ = Σ t^i（λ = (−1)ⁿt の代わりに t を使う誤った N）"""
    total = x
    y = x
    for _ in range(n):
        y = m.cyclic(n, y)
        total = total + y
    return total
