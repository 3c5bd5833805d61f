"""有理数行列の厳密な線形代数のテスト"""

from fractions import Fraction

import pytest

from asymptotic_cyclic.cocyclic.exact import column_basis, fraction_matrix, identity, is_zero, matmul, nullspace, rank, row_echelon, solve, zeros


class TestRank:
    """rank関数のテスト"""

    def test_dependent_rows(self) -> None:
        """従属な行を持つ行列の階数"""
        assert rank(fraction_matrix([[1, 2], [2, 4]])) == 1

    def test_identity(self) -> None:
        """単位行列は満階数であること"""
        assert rank(identity(4)) == 4

    def test_empty(self) -> None:
        """空行列の階数は0であること"""
        assert rank(zeros(0, 3)) == 0

    def test_string_entries(self) -> None:
        """"p/q" 文字列の要素が Fraction に変換されること"""
        m = fraction_matrix([["1/2", "1/3"], ["3/2", "1"]])
        assert m[0, 1] == Fraction(1, 3)
        assert rank(m) == 1


class TestRowEchelon:
    """row_echelon関数のテスト"""

    def test_pivots_and_free_columns(self) -> None:
        """軸列と自由列が分かれること"""
        echelon, _ = row_echelon(fraction_matrix([[0, 1, 2], [0, 2, 4]]))
        assert echelon.pivots == (1,)
        assert echelon.free == (0, 2)


class TestNullspace:
    """nullspace関数のテスト"""

    def test_kernel_is_annihilated(self) -> None:
        """核の基底が行列で0に送られること"""
        m = fraction_matrix([[1, 2, 3], [2, 4, 6]])
        kernel = nullspace(m)
        assert kernel.shape == (3, 2)
        assert is_zero(matmul(m, kernel))

    def test_injective(self) -> None:
        """単射なら核は0列であること"""
        assert nullspace(identity(2)).shape == (2, 0)

    def test_no_rows(self) -> None:
        """行が無ければ全空間が核であること"""
        assert nullspace(zeros(0, 2)).shape == (2, 2)


class TestColumnBasis:
    """column_basis関数のテスト"""

    def test_pivot_columns(self) -> None:
        """像の基底が元の行列の軸列であること"""
        basis = column_basis(fraction_matrix([[1, 2, 0], [1, 2, 1]]))
        assert basis.tolist() == [[1, 0], [1, 1]]

    def test_zero_map(self) -> None:
        """零写像の像は0列であること"""
        assert column_basis(zeros(2, 3)).shape == (2, 0)


class TestSolve:
    """solve関数のテスト"""

    def test_consistent_system(self) -> None:
        """解がある場合に m x = rhs を満たす解を返すこと"""
        m = fraction_matrix([[1, 1], [0, 2]])
        x = solve(m, fraction_matrix([[3], [4]]))
        assert x is not None
        assert x.tolist() == [[1], [2]]

    def test_vector_rhs(self) -> None:
        """1次元の右辺には1次元の解を返すこと"""
        x = solve(fraction_matrix([[2]]), fraction_matrix([[1]])[:, 0])
        assert x is not None
        assert x.tolist() == [Fraction(1, 2)]

    def test_inconsistent_system(self) -> None:
        """解が無ければ None を返すこと"""
        assert solve(fraction_matrix([[1], [1]]), fraction_matrix([[1], [0]])) is None

    def test_incompatible_product(self) -> None:
        """形の合わない積は ValueError になること"""
        with pytest.raises(ValueError, match="cannot compose"):
            matmul(zeros(2, 3), zeros(2, 3))
