"""重み α_r と ι, η の展開のテスト"""

import math
from fractions import Fraction

import pytest

from asymptotic_cyclic.charmaps import HopfWord, alpha, alpha_partial_sum, eta_cochain, eta_expand, hopf_simplex_diagonal, iota_cochain, iota_element, iota_expand, tensor
from asymptotic_cyclic.cocyclic import TruncatedCochain
from asymptotic_cyclic.cocyclic.chains import LinearCombination
from asymptotic_cyclic.simplex import SimplexPoint, universal_cocycle, universal_prefix


def _key(word: tuple[int, ...], coords: tuple[int, ...]) -> tuple[HopfWord, SimplexPoint]:
    return HopfWord(word), SimplexPoint(tuple(Fraction(t) for t in coords))


class TestAlpha:
    """alpha関数のテスト"""

    def test_first_values(self) -> None:
        """α₀ = 1、α₁ = −1/2、α₂ = −11/24 であること"""
        assert alpha(0) == 1
        assert alpha(1) == Fraction(-1, 2)
        assert alpha(2) == Fraction(-11, 24)

    def test_partial_sums_telescope(self) -> None:
        """Σ_{r≤n} α_r · (2n)! = 1 が n ≤ 20 で厳密に成り立つこと"""
        for n in range(21):
            assert alpha_partial_sum(n) * math.factorial(2 * n) == 1
        assert alpha_partial_sum(2) == Fraction(1, 24)

    def test_negative(self) -> None:
        """負の添字は ValueError になること"""
        with pytest.raises(ValueError, match="r must be >= 0"):
            alpha(-1)
        with pytest.raises(ValueError, match="n must be >= 0"):
            alpha_partial_sum(-1)


class TestIotaExpand:
    """iota_expand関数のテスト"""

    def test_terms(self) -> None:
        """次数 2n の項が (r, α_r, φ_{2n−2r}) を並べること"""
        expansions = iota_expand(universal_prefix(3), 3)
        assert [e.degree for e in expansions] == [0, 2, 4, 6]
        third = expansions[3]
        assert [t.r for t in third.terms] == [0, 1, 2, 3]
        assert [t.weight for t in third.terms] == [alpha(r) for r in range(4)]
        assert [t.chain for t in third.terms] == [universal_cocycle(3 - r) for r in range(4)]
        assert third.weight_sum == Fraction(1, 720)

    def test_shorter_window(self) -> None:
        """n_max が切断長より短ければその次数までを返すこと"""
        assert len(iota_expand(universal_prefix(4), 2)) == 3

    def test_requires_even_prefix(self) -> None:
        """奇パリティの切断は ValueError になること"""
        odd = TruncatedCochain(parity=1, components=(LinearCombination(),))
        with pytest.raises(ValueError, match="needs an even prefix"):
            iota_expand(odd, 0)

    def test_requires_long_prefix(self) -> None:
        """切断が短いと ValueError になること"""
        with pytest.raises(ValueError, match="need 6"):
            iota_expand(universal_prefix(2), 3)


class TestIotaElement:
    """iota_element / iota_cochain関数のテスト"""

    def test_degree_two(self) -> None:
        """ι(φ)₂ = −(1⊗1 | 0, 0) − ½(1⊗1 | 1, 1) であること"""
        diag = hopf_simplex_diagonal()
        element = iota_element(diag, iota_expand(universal_prefix(1), 1)[1])
        expected = LinearCombination({_key((0, 0), (0, 0)): Fraction(-1), _key((0, 0), (1, 1)): Fraction(-1, 2)})
        assert element == expected

    def test_degree_zero_is_basepoint(self) -> None:
        """ι(φ)₀ = (() | *) であること"""
        diag = hopf_simplex_diagonal()
        assert iota_element(diag, iota_expand(universal_prefix(0), 0)[0]) == LinearCombination({_key((), ()): 1})

    def test_only_unit_words(self) -> None:
        """ι の像には単位語だけが現れること"""
        cochain = iota_cochain(hopf_simplex_diagonal(), universal_prefix(3))
        assert cochain.parity == 0
        assert cochain.length == 3
        for k, component in enumerate(cochain.components):
            for word, point in component.support():
                assert word.is_unit()
                assert point.degree == 2 * k


class TestEta:
    """eta_expand / eta_cochain関数のテスト"""

    def test_expand(self) -> None:
        """η は語 X を付けて次数を1上げること"""
        term = eta_expand(universal_cocycle(1), 2)
        assert term.degree == 3
        assert term.word == HopfWord.primitive()

    def test_degree_one(self) -> None:
        """η(φ)₁ = (X | 0) であること"""
        cochain = eta_cochain(hopf_simplex_diagonal(), universal_prefix(0))
        assert cochain.parity == 1
        assert cochain.components[0] == LinearCombination({_key((1,), (0,)): 1})

    def test_degree_three(self) -> None:
        """η(φ)₃ = X ∪ φ₂ の係数が φ₂ と一致すること"""
        cochain = eta_cochain(hopf_simplex_diagonal(), universal_prefix(1))
        half = Fraction(-1, 2)
        expected = tensor(LinearCombination.basis(HopfWord((1, 0, 0))), universal_cocycle(1).map_basis(lambda pt: pt.coface(0)))
        assert cochain.components[1] == expected
        assert sorted(c for _, c in cochain.components[1].items()) == [half, half]

    def test_negative_degree(self) -> None:
        """負の次数は ValueError になること"""
        with pytest.raises(ValueError, match="degree must be >= 0"):
            eta_expand(universal_cocycle(0), -1)

    def test_requires_even_prefix(self) -> None:
        """奇パリティの切断は ValueError になること"""
        odd = TruncatedCochain(parity=1, components=(LinearCombination(),))
        with pytest.raises(ValueError, match="needs an even prefix"):
            eta_cochain(hopf_simplex_diagonal(), odd)
