"""K₀ とのペアリングと McKean–Singer 指数のテスト"""

import numpy as np
import pytest

from asymptotic_cyclic.config.app import FredholmSettings
from asymptotic_cyclic.fredholm import (
    EvenFredholmModule,
    HypothesisError,
    IndexRoundingError,
    check_commutes,
    check_idempotent,
    jlo_chern_evaluator,
    mckean_singer_index,
    pair_even_K0,
    perturbation_stability,
    round_index,
)


class TestCheckIdempotent:
    """check_idempotent関数のテスト"""

    def test_projection(self, index_one: EvenFredholmModule) -> None:
        """射影は通ること"""
        check_idempotent(index_one, index_one.element("q"))

    def test_not_idempotent(self, index_one: EvenFredholmModule) -> None:
        """p² ≠ p は HypothesisError になること"""
        with pytest.raises(HypothesisError, match="p is not idempotent") as exc_info:
            check_idempotent(index_one, 2 * np.eye(3, dtype=complex))
        assert exc_info.value.name == "p^2 = p"
        assert exc_info.value.defect == pytest.approx(2.0)


class TestPairEvenK0:
    """pair_even_K0関数のテスト"""

    def test_commuting_projection_collapses(self, commuting_projection: EvenFredholmModule) -> None:
        """[D,p] = 0 なら n = 0 の項 Str(p e^{−D²}) だけが残ること"""
        p = commuting_projection.element("p")
        pairing = pair_even_K0(commuting_projection, jlo_chern_evaluator(commuting_projection, "block"), p, 3)
        assert pairing.complex_total == pytest.approx(2.0, abs=1e-12)
        assert [t.factor for t in pairing.terms] == [1.0, -2.0, 12.0, -120.0]
        assert all(abs(complex(*t.cochain_value)) < 1e-14 for t in pairing.terms[1:])

    def test_exact_and_block_agree(self, index_one: EvenFredholmModule) -> None:
        """非可換な射影でも厳密モードとブロックモードが一致すること"""
        q = index_one.element("q")
        exact = pair_even_K0(index_one, jlo_chern_evaluator(index_one, "exact"), q, 2)
        block = pair_even_K0(index_one, jlo_chern_evaluator(index_one, "block"), q, 2)
        assert exact.complex_total == pytest.approx(block.complex_total, abs=1e-10)

    def test_negative_truncation(self, index_one: EvenFredholmModule) -> None:
        """負の打ち切りは ValueError になること"""
        with pytest.raises(ValueError, match="truncation must be >= 0"):
            pair_even_K0(index_one, jlo_chern_evaluator(index_one), index_one.element("p"), -1)


class TestMcKeanSinger:
    """mckean_singer_index / check_commutes / round_index関数のテスト"""

    @pytest.mark.parametrize(("fixture", "expected"), [("index_one", 1), ("balanced", 0), ("commuting_projection", 2)])
    def test_bundled_indices(self, fixture: str, expected: int, request: pytest.FixtureRequest) -> None:
        """同梱の例の指数が 1, 0, 2 であること"""
        fm = request.getfixturevalue(fixture)
        result = mckean_singer_index(fm, fm.element("p"))
        assert result.index == expected
        assert result.spread < 1e-10
        assert result.times == [0.25, 0.5, 1.0, 2.0]

    def test_non_commuting(self, index_one: EvenFredholmModule) -> None:
        """[D,p] ≠ 0 は HypothesisError になること"""
        with pytest.raises(HypothesisError, match="does not vanish") as exc_info:
            mckean_singer_index(index_one, index_one.element("q"))
        assert exc_info.value.name == "[D, p] = 0"

    def test_not_self_adjoint(self, balanced: EvenFredholmModule) -> None:
        """自己共役でない冪等元は HypothesisError になること"""
        skew = np.array([[1.0, 1.0], [0.0, 0.0]], dtype=complex)
        with pytest.raises(HypothesisError, match="p is not self-adjoint"):
            mckean_singer_index(balanced, skew)

    def test_check_commutes(self, commuting_projection: EvenFredholmModule) -> None:
        """可換なら ‖[D,p]‖ を返すこと"""
        assert check_commutes(commuting_projection, commuting_projection.element("p")) < 1e-15

    def test_round_index(self) -> None:
        """ガード幅の内側なら丸め、外なら IndexRoundingError になること"""
        assert round_index(1.05 + 0j, 0.1) == 1
        assert round_index(-1.98 + 0.01j, 0.1) == -2
        with pytest.raises(IndexRoundingError, match="not within 0.1 of an integer") as exc_info:
            round_index(1.4 + 0j, 0.1)
        assert exc_info.value.value == 1.4
        with pytest.raises(IndexRoundingError):
            round_index(1.0 + 0.5j, 0.1)

    def test_t_independence_guard(self, index_one: EvenFredholmModule) -> None:
        """時刻が1つでも t 非依存性の検査を通ること"""
        result = mckean_singer_index(index_one, index_one.element("p"), FredholmSettings(mckean_singer_times=[1.0]))
        assert result.spread == 0.0
        assert result.index == 1


class TestPerturbationStability:
    """perturbation_stability関数のテスト"""

    def test_zero_perturbation(self, commuting_projection: EvenFredholmModule) -> None:
        """ε = 0 ではペアリングが変わらないこと"""
        report = perturbation_stability(commuting_projection, commuting_projection.element("p"), 0.0)
        assert report.difference == 0.0
        assert report.base == pytest.approx((2.0, 0.0), abs=1e-12)

    def test_identity_is_fixed(self, index_one: EvenFredholmModule) -> None:
        """p = Id はユニタリ共役で動かないこと"""
        report = perturbation_stability(index_one, index_one.element("p"), 0.1, n_max=1)
        assert report.difference < 1e-10
