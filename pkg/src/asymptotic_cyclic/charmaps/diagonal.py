"""対角余巡回加群と cup 積"""

from __future__ import annotations

import logging
from collections.abc import Hashable
from typing import Any

import numpy as np

from asymptotic_cyclic.charmaps.shuffles import shuffles
from asymptotic_cyclic.cocyclic.chains import LinearCombination, Scalar
from asymptotic_cyclic.cocyclic.exceptions import DegreeMismatchError
from asymptotic_cyclic.cocyclic.module import BasisCocyclicModule
from asymptotic_cyclic.cocyclic.operators import hochschild_b

logger = logging.getLogger(__name__)


def tensor[K: Hashable, L: Hashable](x: LinearCombination[K], y: LinearCombination[L]) -> LinearCombination[tuple[K, L]]:
    """x ⊗ y（基底の組の線形結合）"""
    return LinearCombination(((a, b), c * e) for a, c in x.items() for b, e in y.items())


class DiagonalModule[K: Hashable, L: Hashable](BasisCocyclicModule[tuple[K, L]]):
    """Diag(C ⊗ D): 次数 n は Cⁿ ⊗ Dⁿ、構造写像は各因子に同時に作用する"""

    def __init__(self, left: BasisCocyclicModule[K], right: BasisCocyclicModule[L]) -> None:
        self.left = left
        self.right = right
        self.name = f"diag({left.name}, {right.name})"
        self.exact = left.exact and right.exact

    def basis_degree(self, key: tuple[K, L]) -> int:
        n, m = self.left.basis_degree(key[0]), self.right.basis_degree(key[1])
        if n != m:
            msg = f"{self.name}: factor degrees differ ({n} vs {m})"
            raise DegreeMismatchError(msg, expected=n, actual=m)
        return n

    def coface_basis(self, i: int, n: int, key: tuple[K, L]) -> LinearCombination[tuple[K, L]]:
        return tensor(self.left.coface_basis(i, n, key[0]), self.right.coface_basis(i, n, key[1]))

    def codegeneracy_basis(self, j: int, n: int, key: tuple[K, L]) -> LinearCombination[tuple[K, L]]:
        return tensor(self.left.codegeneracy_basis(j, n, key[0]), self.right.codegeneracy_basis(j, n, key[1]))

    def cyclic_basis(self, n: int, key: tuple[K, L]) -> LinearCombination[tuple[K, L]]:
        return tensor(self.left.cyclic_basis(n, key[0]), self.right.cyclic_basis(n, key[1]))

    def sample_basis(self, n: int, rng: np.random.Generator) -> tuple[K, L]:
        return self.left.sample_basis(n, rng), self.right.sample_basis(n, rng)

    def norm(self, n: int, x: LinearCombination[tuple[K, L]]) -> Scalar:
        return x.l1_norm()


def _check_degree(m: BasisCocyclicModule[Any], x: LinearCombination[Any], degree: int) -> None:
    if degree < 0:
        msg = f"{m.name}: degree must be >= 0, got {degree}"
        raise DegreeMismatchError(msg, expected=0, actual=degree)
    m.validate(degree, x)


def _apply_cofaces(m: BasisCocyclicModule[Any], x: LinearCombination[Any], degree: int, indices: tuple[int, ...]) -> LinearCombination[Any]:
    # indices を前から順に適用する（次数は1つずつ上がる）
    for offset, i in enumerate(indices):
        x = m.coface(i, degree + offset, x)
    return x


def cup_diagonal[K: Hashable, L: Hashable](
    diag: DiagonalModule[K, L],
    u: LinearCombination[K],
    k: int,
    v: LinearCombination[L],
    q: int,
) -> LinearCombination[tuple[K, L]]:
    """u ∪ v = d_n…d_{k+1}u ⊗ d₀ᵏv（n = k + q）

    前面・後面（Alexander–Whitney 型）の積で、b(u ∪ v) = bu ∪ v + (−1)ᵏ u ∪ bv を満たす。
    シャッフルの符号付き和による形は shuffle_cup_diagonal を参照。

    Args:
        diag: 対角加群
        u: 左因子の次数 k の元
        k: u の次数
        v: 右因子の次数 q の元
        q: v の次数

    Returns:
        LinearCombination: 次数 k + q の対角元

    Raises:
        DegreeMismatchError: u, v の次数が k, q と異なる場合
    """
    _check_degree(diag.left, u, k)
    _check_degree(diag.right, v, q)
    n = k + q
    front = _apply_cofaces(diag.left, u, k, tuple(range(k + 1, n + 1)))
    back = _apply_cofaces(diag.right, v, q, (0,) * k)
    return tensor(front, back)


def shuffle_cup_diagonal[K: Hashable, L: Hashable](
    diag: DiagonalModule[K, L],
    u: LinearCombination[K],
    k: int,
    v: LinearCombination[L],
    q: int,
) -> LinearCombination[tuple[K, L]]:
    """Σ_{μ ∈ Sh(k,q)} sign(μ) d_{μ̄(n)}…d_{μ̄(k+1)}u ⊗ d_{μ̄(k)}…d_{μ̄(1)}v（μ̄(i) = μ(i) − 1）

    各項の余面写像は添字の小さい方から適用する。
    """
    _check_degree(diag.left, u, k)
    _check_degree(diag.right, v, q)
    total: LinearCombination[tuple[K, L]] = LinearCombination()
    for mu in shuffles(k, q):
        front = _apply_cofaces(diag.left, u, k, tuple(i - 1 for i in mu.back()))
        back = _apply_cofaces(diag.right, v, q, tuple(i - 1 for i in mu.front()))
        total = total + tensor(front, back) * mu.sign
    return total


def leibniz_defect[K: Hashable, L: Hashable](
    diag: DiagonalModule[K, L],
    u: LinearCombination[K],
    k: int,
    v: LinearCombination[L],
    q: int,
    *,
    shuffle: bool = False,
) -> LinearCombination[tuple[K, L]]:
    """b(u ∪ v) − (bu ∪ v + (−1)ᵏ u ∪ bv)

    shuffle=True ならシャッフル和の cup 積で計算する。
    """
    cup = shuffle_cup_diagonal if shuffle else cup_diagonal
    lhs = hochschild_b(diag, k + q, cup(diag, u, k, v, q))
    rhs = cup(diag, hochschild_b(diag.left, k, u), k + 1, v, q) + cup(diag, u, k, hochschild_b(diag.right, q, v), q + 1) * (-1 if k % 2 else 1)
    defect = lhs - rhs
    if defect:
        logger.debug("%s: Leibniz defect with %d terms (k=%d, q=%d, shuffle=%s)", diag.name, len(defect), k, q, shuffle)
    return defect
