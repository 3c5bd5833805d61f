"""多項式 Hopf 代数 ℂ[X] の Hopf 余巡回加群（MPI は (ε, 1)）"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from asymptotic_cyclic.cocyclic.chains import LinearCombination
from asymptotic_cyclic.cocyclic.module import BasisCocyclicModule

HopfChain = LinearCombination["HopfWord"]


@dataclass(frozen=True, order=True)
class HopfWord:
    """単項式の語 X^{m₁} ⊗ … ⊗ X^{mₙ}

    指数0の文字が単位元 1、指数1の文字が原始元 X。語の長さが次数。
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(m < 0 for m in self.exponents):
            msg = f"exponents must be >= 0, got {self.exponents}"
            raise ValueError(msg)

    @property
    def degree(self) -> int:
        """語の長さ"""
        return len(self.exponents)

    @classmethod
    def unit(cls, n: int) -> HopfWord:
        """1 ⊗ … ⊗ 1（長さ n）"""
        return cls((0,) * n)

    @classmethod
    def primitive(cls) -> HopfWord:
        """長さ1の語 X"""
        return cls((1,))

    def is_unit(self) -> bool:
        """全ての文字が 1 か"""
        return not any(self.exponents)

    def letters(self) -> str:
        """文字 1, X, X^m を ⊗ でつないだ表示"""
        if not self.exponents:
            return "()"
        return " ⊗ ".join("1" if m == 0 else "X" if m == 1 else f"X^{m}" for m in self.exponents)

    def act(self, slot: int, a: np.ndarray, dirac: np.ndarray) -> np.ndarray:
        """slot 番目（1始まり）の文字 X^m を a に作用させる（m 重の交換子 [D, ·]）"""
        result = a
        for _ in range(self.exponents[slot - 1]):
            result = dirac @ result - result @ dirac
        return result

    def __repr__(self) -> str:
        return self.letters()


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _multinomial(total: int, parts: tuple[int, ...]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


class HopfPolynomialModule(BasisCocyclicModule[HopfWord]):
    """ℂ[X]^{⊗n} を次数 n とする余巡回加群

    d₀(h) = 1 ⊗ h、1 ≤ i ≤ n の d_i は i 番目の文字に余積 Δ(Xᵐ) = Σ C(m,a) Xᵃ ⊗ X^{m−a}、
    d_{n+1}(h) = h ⊗ 1、s_j は j+1 番目の文字に余単位 ε、t_n(h¹ ⊗ … ⊗ hⁿ) = S(h¹)·(h² ⊗ … ⊗ hⁿ ⊗ 1)。
    """

    name = "hopf-polynomial"
    exact = True

    def __init__(self, max_exponent: int = 2) -> None:
        self.max_exponent = max_exponent

    def basis_degree(self, key: HopfWord) -> int:
        return key.degree

    def coface_basis(self, i: int, n: int, key: HopfWord) -> HopfChain:
        ms = key.exponents
        if i == 0:
            return LinearCombination.basis(HopfWord((0, *ms)))
        if i == n + 1:
            return LinearCombination.basis(HopfWord((*ms, 0)))
        m = ms[i - 1]
        return LinearCombination((HopfWord((*ms[: i - 1], a, m - a, *ms[i:])), math.comb(m, a)) for a in range(m + 1))

    def codegeneracy_basis(self, j: int, n: int, key: HopfWord) -> HopfChain:
        ms = key.exponents
        if ms[j] != 0:
            return LinearCombination()
        return LinearCombination.basis(HopfWord(ms[:j] + ms[j + 1 :]))

    def cyclic_basis(self, n: int, key: HopfWord) -> HopfChain:
        if n == 0:
            return LinearCombination.basis(key)
        first, rest = key.exponents[0], key.exponents[1:]
        sign = -1 if first % 2 else 1
        terms = []
        # S(X^m) = (−X)^m を n 個の文字に対角的に作用させる
        for parts in _compositions(first, n):
            shifted = tuple(a + b for a, b in zip(parts, (*rest, 0), strict=True))
            terms.append((HopfWord(shifted), sign * _multinomial(first, parts)))
        return LinearCombination(terms)

    def sample_basis(self, n: int, rng: np.random.Generator) -> HopfWord:
        return HopfWord(tuple(int(m) for m in rng.integers(0, self.max_exponent + 1, size=n)))
