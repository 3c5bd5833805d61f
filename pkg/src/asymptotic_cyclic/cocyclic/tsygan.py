"""Tsygan（巡回）二重複体の全微分"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any

from asymptotic_cyclic.cocyclic.module import CocyclicModule
from asymptotic_cyclic.cocyclic.operators import bar_b_prime, cyclic_N, hochschild_b, one_minus_lambda

Operator = Callable[[CocyclicModule[Any], int, Any], Any]
TsyganCochain = dict[tuple[int, int], Any]


@dataclass(frozen=True)
class TsyganBicomplex:
    """列 p、次数 q の二重複体 C^{p,q} = C^q

    偶数列は縦に b、奇数列は縦に −b′、横は偶数列から (Id − λ)、奇数列から N。
    行写像は差し替え可能（変異テスト用）。
    """

    module: CocyclicModule[Any]
    vertical_even: Operator = hochschild_b
    vertical_odd: Operator = bar_b_prime
    horizontal_even: Operator = one_minus_lambda
    horizontal_odd: Operator = cyclic_N

    def total(self, cochain: Mapping[tuple[int, int], Any]) -> TsyganCochain:
        """全微分 D = 横 + (−1)^p 縦 を有限切断に適用する"""
        m = self.module
        result: TsyganCochain = {}

        def accumulate(key: tuple[int, int], value: Any) -> None:
            result[key] = result[key] + value if key in result else value

        for (p, q), x in sorted(cochain.items()):
            horizontal = self.horizontal_odd if p % 2 else self.horizontal_even
            vertical = self.vertical_odd if p % 2 else self.vertical_even
            accumulate((p + 1, q), horizontal(m, q, x))
            accumulate((p, q + 1), vertical(m, q, x) * (-1 if p % 2 else 1))
        return result

    def is_zero(self, cochain: Mapping[tuple[int, int], Any]) -> bool:
        """全成分が零か"""
        return all(self.module.is_zero(q, x) for (_, q), x in cochain.items())


def tsygan_total_differential(m: CocyclicModule[Any], cochain: Mapping[tuple[int, int], Any]) -> TsyganCochain:
    """Tsygan 二重複体の全微分を列添字付きコチェインに適用する"""
    return TsyganBicomplex(m).total(cochain)
