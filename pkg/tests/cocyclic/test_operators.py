"""作用素 b, b′, λ, N, B のテスト"""

from fractions import Fraction

import pytest

from asymptotic_cyclic.cocyclic import (
    DegreeMismatchError,
    IndexRangeError,
    LinearCombination,
    bar_b_prime,
    connes_B,
    cyclic_N,
    cyclic_power,
    hochschild_b,
    one_minus_lambda,
)
from asymptotic_cyclic.simplex import BASEPOINT, SimplexModule, SimplexPoint

SIMPLEX = SimplexModule()


def _point(*coords: int | str) -> LinearCombination[SimplexPoint]:
    return LinearCombination.basis(SimplexPoint(tuple(Fraction(c) for c in coords)))


class TestLinearCombination:
    """LinearCombinationのテスト"""

    def test_zero_coefficients_are_dropped(self) -> None:
        """係数が打ち消し合った基底は台から消えること"""
        x = LinearCombination([("a", 1), ("b", 2), ("a", -1)])
        assert x.support() == ["b"]
        assert x.coefficient("a") == 0

    def test_arithmetic(self) -> None:
        """加減算とスカラー倍が係数ごとに行われること"""
        x = LinearCombination({"a": Fraction(1, 2), "b": 1})
        y = LinearCombination({"a": Fraction(1, 2)})
        assert x - y == LinearCombination({"b": 1})
        assert (x + y) * 2 == LinearCombination({"a": 2, "b": 2})
        assert -x == x * -1

    def test_l1_norm(self) -> None:
        """ℓ¹ ノルムが係数の絶対値の和であること"""
        assert LinearCombination({"a": Fraction(-1, 2), "b": Fraction(1, 3)}).l1_norm() == Fraction(5, 6)
        assert LinearCombination().l1_norm() == 0

    def test_repr_of_zero(self) -> None:
        """零元の表示が "0" であること"""
        assert repr(LinearCombination()) == "0"


class TestHochschildB:
    """hochschild_b関数のテスト"""

    def test_basepoint(self) -> None:
        """b(*) = (0) − (1) であること"""
        assert hochschild_b(SIMPLEX, 0, LinearCombination.basis(BASEPOINT)) == _point(0) - _point(1)

    def test_degree_one_vertex(self) -> None:
        """b((0)) = (0, 1) であること"""
        assert hochschild_b(SIMPLEX, 1, _point(0)) == _point(0, 1)

    def test_b_prime_of_basepoint(self) -> None:
        """b′ は次数0で d₀ だけになること"""
        assert bar_b_prime(SIMPLEX, 0, LinearCombination.basis(BASEPOINT)) == _point(0)


class TestCyclicOperators:
    """λ, N, t の冪のテスト"""

    def test_cyclic_power_reduces_modulo(self) -> None:
        """t^k の k が n+1 を法として扱われること"""
        x = _point(0, "1/2")
        assert cyclic_power(SIMPLEX, 2, x, 3) == x
        assert cyclic_power(SIMPLEX, 2, x, -1) == cyclic_power(SIMPLEX, 2, x, 2)

    def test_cyclic_N_in_degree_zero(self) -> None:
        """N₀ が恒等写像であること"""
        x = LinearCombination.basis(BASEPOINT, Fraction(3))
        assert cyclic_N(SIMPLEX, 0, x) == x

    def test_one_minus_lambda_in_degree_one(self) -> None:
        """次数1で λ = −t なので Id − λ = Id + t であること"""
        assert one_minus_lambda(SIMPLEX, 1, _point("1/3")) == _point("1/3") + _point("2/3")


class TestConnesB:
    """connes_B関数のテスト"""

    def test_vertex_in_degree_one(self) -> None:
        """B((0)) = 2·* であること"""
        assert connes_B(SIMPLEX, 1, _point(0)) == LinearCombination.basis(BASEPOINT, 2)

    def test_top_vertex_vanishes(self) -> None:
        """B(τ²δ₀²(*)) = B((1, 1)) = 0 であること"""
        assert connes_B(SIMPLEX, 2, _point(1, 1)) == LinearCombination()

    def test_degree_zero_raises(self) -> None:
        """次数0では DegreeMismatchError になること"""
        with pytest.raises(DegreeMismatchError, match="degree >= 1"):
            connes_B(SIMPLEX, 0, LinearCombination.basis(BASEPOINT))


class TestStructureMapValidation:
    """構造写像の添字と次数の検査のテスト"""

    def test_coface_index_out_of_range(self) -> None:
        """d_3 を次数1に適用すると IndexRangeError になること"""
        with pytest.raises(IndexRangeError, match="coface index 3") as excinfo:
            SIMPLEX.coface(3, 1, _point(0))
        assert excinfo.value.name == "d"
        assert excinfo.value.degree == 1

    def test_codegeneracy_in_degree_zero(self) -> None:
        """次数0には余退化写像が無いこと"""
        with pytest.raises(IndexRangeError, match="codegeneracy index 0"):
            SIMPLEX.codegeneracy(0, 0, LinearCombination.basis(BASEPOINT))

    def test_degree_mismatch(self) -> None:
        """次数の合わない元を渡すと DegreeMismatchError になること"""
        with pytest.raises(DegreeMismatchError, match="expected an element of degree 2") as excinfo:
            SIMPLEX.cyclic(2, _point(0))
        assert excinfo.value.actual == 1
