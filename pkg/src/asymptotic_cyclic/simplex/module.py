"""単体の余巡回加群 ⊕ ℚ[Δⁿ] と鎖の直列化"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.cocyclic.chains import LinearCombination, Scalar
from asymptotic_cyclic.cocyclic.module import BasisCocyclicModule
from asymptotic_cyclic.simplex.points import SimplexPoint, random_point

SimplexChain = LinearCombination[SimplexPoint]


class SimplexModule(BasisCocyclicModule[SimplexPoint]):
    """点を基底とする余巡回加群（構造写像は点ごとの写像の線形拡張、ノルムは係数の ℓ¹）"""

    name = "simplex"
    exact = True

    def __init__(self, denominator: int = 4) -> None:
        self.denominator = denominator

    def basis_degree(self, key: SimplexPoint) -> int:
        return key.degree

    def coface_basis(self, i: int, n: int, key: SimplexPoint) -> SimplexChain:
        return LinearCombination.basis(key.coface(i))

    def codegeneracy_basis(self, j: int, n: int, key: SimplexPoint) -> SimplexChain:
        return LinearCombination.basis(key.codegeneracy(j))

    def cyclic_basis(self, n: int, key: SimplexPoint) -> SimplexChain:
        return LinearCombination.basis(key.cyclic())

    def sample_basis(self, n: int, rng: np.random.Generator) -> SimplexPoint:
        return random_point(n, rng, self.denominator)


def chain_norm(c: SimplexChain) -> Fraction:
    """Σ |係数|（各点の重みは1）"""
    return Fraction(c.l1_norm())


class ChainTerm(BaseModel):
    """鎖の1項の JSON 形式"""

    coords: list[str]
    coeff: str

    model_config = {"extra": "forbid", "frozen": True}


def serialize_chain(c: SimplexChain) -> list[ChainTerm]:
    """点の辞書順に並べた [{"coords": ["p/q", …], "coeff": "p/q"}, …]"""
    return [ChainTerm(coords=p.to_strings(), coeff=str(Fraction(coeff))) for p, coeff in sorted(c.items(), key=lambda item: item[0])]


def deserialize_chain(terms: Iterable[ChainTerm | dict]) -> SimplexChain:
    """serialize_chain の逆

    Raises:
        ValidationError: 形式が不正な場合
        NonMonotonePointError: 座標が単調でない場合
    """
    pairs: list[tuple[SimplexPoint, Scalar]] = []
    for term in terms:
        parsed = term if isinstance(term, ChainTerm) else ChainTerm.model_validate(term)
        pairs.append((SimplexPoint(tuple(Fraction(t) for t in parsed.coords)), Fraction(parsed.coeff)))
    return LinearCombination(pairs)
