"""幾何学的単体の有理点と構造写像"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from asymptotic_cyclic.cocyclic.exceptions import IndexRangeError
from asymptotic_cyclic.simplex.exceptions import NonMonotonePointError


@dataclass(frozen=True, order=True)
class SimplexPoint:
    """Δⁿ の点 0 ≤ t₁ ≤ … ≤ t_n ≤ 1（t₀ = 0, t_{n+1} = 1 は省く）

    次数0の点は基点 * のみ。構造写像は間隔表示 (t₁, t₂−t₁, …, 1−t_n) の上で
    δ_i = 位置 i に間隔0を挿入、σ_j = 間隔 j と j+1 を併合、τ = 間隔の左回転。
    """

    coords: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coords = tuple(Fraction(t) for t in self.coords)
        object.__setattr__(self, "coords", coords)
        bounded = (Fraction(0), *coords, Fraction(1))
        if any(b < a for a, b in zip(bounded, bounded[1:], strict=False)):
            msg = f"coordinates must satisfy 0 <= t1 <= ... <= tn <= 1, got {[str(t) for t in coords]}"
            raise NonMonotonePointError(msg, coords)

    @property
    def degree(self) -> int:
        """次数 n"""
        return len(self.coords)

    def gaps(self) -> tuple[Fraction, ...]:
        """間隔 (t₁, t₂−t₁, …, 1−t_n)"""
        bounded = (Fraction(0), *self.coords, Fraction(1))
        return tuple(b - a for a, b in zip(bounded, bounded[1:], strict=False))

    @classmethod
    def from_gaps(cls, gaps: Sequence[Fraction | int]) -> SimplexPoint:
        """間隔から点を作る

        Raises:
            NonMonotonePointError: 間隔が負、または和が1でない場合
        """
        values = [Fraction(g) for g in gaps]
        if not values or sum(values) != 1:
            msg = f"gaps must sum to 1, got {[str(g) for g in values]}"
            raise NonMonotonePointError(msg, tuple(values))
        coords = []
        total = Fraction(0)
        for g in values[:-1]:
            total += g
            coords.append(total)
        return cls(tuple(coords))

    @classmethod
    def vertex(cls, n: int, ones: int) -> SimplexPoint:
        """(0, …, 0, 1, …, 1)（末尾に ones 個の1）"""
        return cls((Fraction(0),) * (n - ones) + (Fraction(1),) * ones)

    def coface(self, i: int) -> SimplexPoint:
        """δ_i: Δⁿ → Δⁿ⁺¹（0 ≤ i ≤ n+1）"""
        n = self.degree
        if not 0 <= i <= n + 1:
            msg = f"coface index {i} out of range for degree {n}"
            raise IndexRangeError(msg, name="d", index=i, degree=n)
        g = self.gaps()
        return SimplexPoint.from_gaps((*g[:i], Fraction(0), *g[i:]))

    def codegeneracy(self, j: int) -> SimplexPoint:
        """σ_j: Δⁿ → Δⁿ⁻¹（0 ≤ j ≤ n−1、t_{j+1} を削除）"""
        n = self.degree
        if not 0 <= j <= n - 1:
            msg = f"codegeneracy index {j} out of range for degree {n}"
            raise IndexRangeError(msg, name="s", index=j, degree=n)
        return SimplexPoint(self.coords[:j] + self.coords[j + 1 :])

    def cyclic(self) -> SimplexPoint:
        """τ_n(t₁, …, t_n) = (t₂−t₁, …, t_n−t₁, 1−t₁)"""
        if not self.coords:
            return self
        g = self.gaps()
        return SimplexPoint.from_gaps((*g[1:], g[0]))

    def max_coordinate(self) -> Fraction:
        """点のノルム max t_i（基点は0）"""
        return max(self.coords, default=Fraction(0))

    def to_strings(self) -> list[str]:
        """座標の "p/q" 表記"""
        return [str(t) for t in self.coords]

    def __repr__(self) -> str:
        if not self.coords:
            return "*"
        return "(" + ", ".join(str(t) for t in self.coords) + ")"


BASEPOINT = SimplexPoint()


def random_point(n: int, rng: np.random.Generator, denominator: int = 4) -> SimplexPoint:
    """分母 denominator の格子上のランダムな単調点（座標の重なりも起こる）"""
    values = sorted(Fraction(int(rng.integers(0, denominator + 1)), denominator) for _ in range(n))
    return SimplexPoint(tuple(values))
