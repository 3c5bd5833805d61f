"""シャッフル列挙のテスト"""

import math

import pytest

from asymptotic_cyclic.charmaps import shuffles


class TestShuffles:
    """shuffles関数のテスト"""

    def test_cardinality_is_binomial(self) -> None:
        """個数が C(p+q, p) であること（p+q ≤ 10）"""
        for total in range(11):
            for p in range(total + 1):
                assert len(shuffles(p, total - p)) == math.comb(total, p)

    def test_one_one(self) -> None:
        """(1,1)-シャッフルは恒等置換と互換で符号が ±1 であること"""
        result = shuffles(1, 1)
        assert [(s.permutation, s.sign) for s in result] == [((1, 2), 1), ((2, 1), -1)]

    def test_front_and_back_are_increasing(self) -> None:
        """前半と後半がそれぞれ単調増加であること"""
        for s in shuffles(3, 2):
            assert list(s.front()) == sorted(s.front())
            assert list(s.back()) == sorted(s.back())
            assert sorted(s.permutation) == [1, 2, 3, 4, 5]

    def test_sign_is_inversion_parity(self) -> None:
        """符号が転倒数の偶奇と一致すること"""
        for s in shuffles(2, 3):
            perm = s.permutation
            inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
            assert s.sign == (-1) ** inversions

    def test_degenerate_sizes(self) -> None:
        """p = 0 または q = 0 では恒等置換のみであること"""
        assert [(s.permutation, s.sign) for s in shuffles(0, 3)] == [((1, 2, 3), 1)]
        assert [(s.permutation, s.sign) for s in shuffles(2, 0)] == [((1, 2), 1)]
        assert [s.permutation for s in shuffles(0, 0)] == [()]

    def test_negative_size(self) -> None:
        """負の p, q は ValueError になること"""
        with pytest.raises(ValueError, match="p and q must be >= 0"):
            shuffles(-1, 2)
