"""有限次元代数の標準余巡回加群のテスト"""

from fractions import Fraction

import numpy as np
import pytest

from asymptotic_cyclic.cocyclic import AlgebraCocyclicModule, cyclic_power, diagonal_algebra, dual_numbers, matrix_algebra_m2


def _rng() -> np.random.Generator:
    return np.random.default_rng(3)


class TestAlgebraCocyclicModule:
    """AlgebraCocyclicModuleのテスト"""

    def test_shapes(self) -> None:
        """次数 n のコチェインの形が (k,)*(n+1) であること"""
        m = matrix_algebra_m2()
        x = m.sample(1, _rng())
        assert x.shape == (4, 4)
        assert m.coface(2, 1, x).shape == (4, 4, 4)
        assert m.codegeneracy(0, 1, x).shape == (4,)
        assert m.degree_of(x) == 1

    def test_cyclic_order(self) -> None:
        """t^{n+1} = Id であること"""
        m = dual_numbers()
        x = m.sample(3, _rng())
        y = x
        for _ in range(4):
            y = m.cyclic(3, y)
        assert m.equal(3, y, x)
        assert m.equal(3, cyclic_power(m, 3, x, 4), x)

    def test_trace_is_cyclic(self) -> None:
        """M₂ のトレースが次数0で b による像を持たないこと"""
        m = matrix_algebra_m2()
        trace = np.array([Fraction(1), Fraction(0), Fraction(0), Fraction(1)], dtype=object)
        b_trace = m.coface(0, 0, trace) - m.coface(1, 0, trace)
        assert m.is_zero(1, b_trace)

    def test_coface_on_diagonal_algebra_is_isometric(self) -> None:
        """ℂᵏ では各 d_i がノルムを保つこと"""
        m = diagonal_algebra(3)
        x = m.sample(2, _rng())
        for i in range(4):
            assert m.norm(3, m.coface(i, 2, x)) == m.norm(2, x)

    def test_codegeneracy_inserts_unit(self) -> None:
        """s_0 φ(a) = φ(a, 1) であること"""
        m = dual_numbers()
        x = np.array([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]], dtype=object)
        assert m.codegeneracy(0, 1, x).tolist() == [1, 3]

    def test_float_backend(self) -> None:
        """浮動小数点版の標本が複素数配列であること"""
        m = diagonal_algebra(2, exact=False)
        x = m.sample(1, _rng())
        assert x.dtype == complex
        assert not m.exact

    def test_bad_structure_constants(self) -> None:
        """構造定数の形が単位元と合わなければ ValueError になること"""
        with pytest.raises(ValueError, match="structure constants must have shape"):
            AlgebraCocyclicModule("broken", np.zeros((2, 2, 3), dtype=int), np.array([1, 0]))
