"""有限次元単位的代数の標準余巡回加群"""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from asymptotic_cyclic.cocyclic.chains import Scalar
from asymptotic_cyclic.cocyclic.module import CocyclicModule

logger = logging.getLogger(__name__)


def _fractions(values: np.ndarray) -> np.ndarray:
    return np.vectorize(lambda v: Fraction(v.item() if isinstance(v, np.generic) else v), otypes=[object])(values)


class AlgebraCocyclicModule(CocyclicModule[np.ndarray]):
    """代数 A 上の (n+1)-線形汎関数 φ(a₀,…,a_n) のなす余巡回加群

    コチェインは形 (k,)*(n+1) の配列で、φ[i₀,…,i_n] = φ(e_{i₀},…,e_{i_n})。
    structure[i, j, l] は e_i e_j = Σ_l structure[i, j, l] e_l の構造定数、unit は単位元の成分。

    d_iφ = φ(…, a_i a_{i+1}, …) (i ≤ n), d_{n+1}φ = φ(a_{n+1}a₀, a₁, …, a_n),
    s_jφ = φ(…, a_j, 1, a_{j+1}, …), tφ(a₀, …, a_n) = φ(a_n, a₀, …, a_{n−1})。
    """

    def __init__(self, name: str, structure: np.ndarray, unit: np.ndarray, *, exact: bool = True) -> None:
        k = unit.shape[0]
        if structure.shape != (k, k, k):
            msg = f"structure constants must have shape {(k, k, k)}, got {structure.shape}"
            raise ValueError(msg)
        self.name = name
        self.exact = exact
        self.dimension = k
        logger.debug("algebra module %s of dimension %d (exact=%s)", name, k, exact)
        if exact:
            self.structure = _fractions(structure)
            self.unit = _fractions(unit)
        else:
            self.structure = structure.astype(complex)
            self.unit = unit.astype(complex)

    def degree_of(self, x: np.ndarray) -> int | None:
        return x.ndim - 1

    def zero(self, n: int) -> np.ndarray:
        shape = (self.dimension,) * (n + 1)
        if not self.exact:
            return np.zeros(shape, dtype=complex)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def is_zero(self, n: int, x: np.ndarray) -> bool:
        if self.exact:
            return all(v == 0 for v in x.flat)
        return bool(np.all(np.abs(x) <= self.tolerance))

    def norm(self, n: int, x: np.ndarray) -> Scalar:
        """係数の ℓ¹ ノルム"""
        if self.exact:
            return sum((abs(v) for v in x.flat), Fraction(0))
        return float(np.abs(x).sum())

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        shape = (self.dimension,) * (n + 1)
        numerators = rng.integers(-6, 7, size=shape)
        if not self.exact:
            return numerators + 1j * rng.integers(-6, 7, size=shape)
        denominators = rng.integers(1, 5, size=shape)
        out = np.empty(shape, dtype=object)
        for idx in np.ndindex(*shape):
            out[idx] = Fraction(int(numerators[idx]), int(denominators[idx]))
        return out

    def _coface(self, i: int, n: int, x: np.ndarray) -> np.ndarray:
        if i <= n:
            contracted = np.tensordot(x, self.structure, axes=([i], [2]))
            return np.moveaxis(contracted, [-2, -1], [i, i + 1])
        contracted = np.tensordot(x, self.structure, axes=([0], [2]))
        return np.moveaxis(contracted, -1, 0)

    def _codegeneracy(self, j: int, n: int, x: np.ndarray) -> np.ndarray:
        return np.tensordot(x, self.unit, axes=([j + 1], [0]))

    def _cyclic(self, n: int, x: np.ndarray) -> np.ndarray:
        return np.moveaxis(x, 0, -1)


def diagonal_algebra(k: int, *, exact: bool = True) -> AlgebraCocyclicModule:
    """可換代数 ℂᵏ（冪等元 e_i による直和）"""
    structure = np.zeros((k, k, k), dtype=int)
    for i in range(k):
        structure[i, i, i] = 1
    return AlgebraCocyclicModule(f"diagonal-C{k}", structure, np.ones(k, dtype=int), exact=exact)


def dual_numbers(*, exact: bool = True) -> AlgebraCocyclicModule:
    """ℂ[ε]/ε²（基底 1, ε）"""
    structure = np.zeros((2, 2, 2), dtype=int)
    structure[0, 0, 0] = 1
    structure[0, 1, 1] = 1
    structure[1, 0, 1] = 1
    return AlgebraCocyclicModule("dual-numbers", structure, np.array([1, 0]), exact=exact)


def matrix_algebra_m2(*, exact: bool = True) -> AlgebraCocyclicModule:
    """M₂（行列単位 E_11, E_12, E_21, E_22 を基底とする）"""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    structure = np.zeros((4, 4, 4), dtype=int)
    for a, (p, q) in enumerate(units):
        for b, (r, s) in enumerate(units):
            if q == r:
                structure[a, b, units.index((p, s))] = 1
    return AlgebraCocyclicModule("matrix-M2", structure, np.array([1, 0, 0, 1]), exact=exact)
