"""基底の有限線形結合"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any

Scalar = Fraction | int | float | complex


class LinearCombination[K: Hashable]:
    """基底 K 上の有限台の線形結合（係数0は保持しない）"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, Scalar] | Iterable[tuple[K, Scalar]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, Scalar] = {}
        for key, coeff in items:
            acc[key] = acc.get(key, 0) + coeff
        self._terms: dict[K, Scalar] = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, key: K, coeff: Scalar = 1) -> LinearCombination[K]:
        """基底元 coeff·key"""
        return cls([(key, coeff)])

    def items(self) -> Iterator[tuple[K, Scalar]]:
        """(基底, 係数) の組"""
        return iter(self._terms.items())

    def support(self) -> list[K]:
        """台"""
        return list(self._terms)

    def coefficient(self, key: K) -> Scalar:
        """key の係数（台の外なら0）"""
        return self._terms.get(key, 0)

    def map_basis(self, f: Callable[[K], K]) -> LinearCombination[K]:
        """基底上の写像 f を線形に拡張して適用する"""
        return LinearCombination((f(k), c) for k, c in self._terms.items())

    def map_linear(self, f: Callable[[K], LinearCombination[Any]]) -> LinearCombination[Any]:
        """基底を線形結合に送る写像 f を線形に拡張して適用する"""
        return LinearCombination((image_key, c * image_coeff) for k, c in self._terms.items() for image_key, image_coeff in f(k).items())

    def l1_norm(self) -> Scalar:
        """係数の ℓ¹ ノルム"""
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def __add__(self, other: LinearCombination[K]) -> LinearCombination[K]:
        return LinearCombination([*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: LinearCombination[K]) -> LinearCombination[K]:
        return LinearCombination([*self._terms.items(), *((k, -c) for k, c in other._terms.items())])

    def __neg__(self) -> LinearCombination[K]:
        return LinearCombination((k, -c) for k, c in self._terms.items())

    def __mul__(self, scalar: Scalar) -> LinearCombination[K]:
        return LinearCombination((k, c * scalar) for k, c in self._terms.items())

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}·{k!r}" for k, c in self._terms.items())
