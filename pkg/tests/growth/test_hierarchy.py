import math

import pytest

from asymptotic_cyclic.growth import (
    GrowthSequence,
    PrefixTooShortError,
    Relation,
    classify_sequence,
    entire_test,
    nth_root_profile,
    precedes_prefix,
    radius_estimate,
    tail_window,
)

N = 40
# 10ⁿn³/n! が r = 8 でも末尾窓で減少する長さ
LONG_N = 400
RADII = [1.0, 2.0, 4.0, 8.0]


def _one(max_index: int = N) -> GrowthSequence:
    return GrowthSequence.factorial_ratio("1", max_index)


def _inverse_factorial(power: int = 1, max_index: int = N) -> GrowthSequence:
    return GrowthSequence.factorial_ratio(f"1/(n!)^{power}", max_index, factorials=[[1, 0, -power]])


def _universal_norms(max_index: int = N) -> GrowthSequence:
    return GrowthSequence.factorial_ratio("(n+1)/(2^n n!)", max_index, factorials=[[1, 0, -1]], geometric=0.5, poly=[[1, 1]])


class TestPrecedesPrefix:
    """precedes_prefix関数のテスト"""

    def test_inverse_factorial_precedes_one(self) -> None:
        """1/n! ≺ 1 が全半径で成り立つこと"""
        verdict = precedes_prefix(_inverse_factorial(), _one(), RADII, N)
        assert verdict.relation == Relation.HOLDS
        assert verdict.probe_radii == RADII
        assert verdict.prefix_length == N
        assert all(d.tail_decreasing for d in verdict.details)

    def test_constant_violated_at_radius_two(self) -> None:
        """1 ≺ 1 が r = 2 で破れ、証拠が末尾窓の先頭にあること"""
        verdict = precedes_prefix(_one(), _one(), [2.0], N)
        assert verdict.relation == Relation.VIOLATED
        assert verdict.witness_radius == 2.0
        assert verdict.witness_index == tail_window(N).start == 30

    def test_witness_exceeds_threshold(self) -> None:
        """violated_at の証拠で rⁿx_n/y_n が閾値を超えていること"""
        verdict = precedes_prefix(_one(), _one(), [2.0], N)
        n = verdict.witness_index
        assert n is not None
        assert 2.0**n > 1e6

    def test_entire_class_inside_bounded_class(self) -> None:
        """n!/(2n)! ≺ 1 が成り立つこと"""
        x = GrowthSequence.factorial_ratio("n!/(2n)!", N, factorials=[[1, 0, 1], [2, 0, -1]])
        assert precedes_prefix(x, _one(), RADII, N).relation == Relation.HOLDS

    def test_equal_sequences_undetermined_at_radius_one(self) -> None:
        """比が定数1のとき r = 1 は判定不能になること"""
        verdict = precedes_prefix(_one(), _one(), [1.0], N)
        assert verdict.relation == Relation.UNDETERMINED

    def test_large_radius_never_overflows(self) -> None:
        """r = 8, N = 40 でも対数空間で評価されること"""
        x = GrowthSequence.factorial_ratio("(2n)!", N, factorials=[[2, 0, 1]])
        verdict = precedes_prefix(x, _one(), [8.0], N)
        assert verdict.relation == Relation.VIOLATED
        assert math.isfinite(verdict.details[0].tail_sup_log10)

    def test_rejects_empty_radii(self) -> None:
        """半径が空ならエラーになること"""
        with pytest.raises(ValueError, match="radii must not be empty"):
            precedes_prefix(_one(), _one(), [], N)

    def test_rejects_long_prefix(self) -> None:
        """計算済みの項を超える N はエラーになること"""
        with pytest.raises(PrefixTooShortError):
            precedes_prefix(_one(10), _one(), [1.0], N)

    def test_deterministic(self) -> None:
        """同じ入力で同じ判定になること"""
        x = _universal_norms()
        first = precedes_prefix(x, _one(), RADII, N)
        second = precedes_prefix(x, _one(), RADII, N)
        assert first == second

    @pytest.mark.parametrize("label", ["inverse_factorial", "universal_norms", "one", "half_power"])
    @pytest.mark.parametrize("lam", [2.0, 10.0])
    @pytest.mark.parametrize("power", [1.0, 3.0])
    def test_geometric_factors_are_absorbed(self, label: str, lam: float, power: float) -> None:
        """λⁿnᵃ 倍しても判定が変わらないこと"""
        sequences = {
            "inverse_factorial": _inverse_factorial(max_index=LONG_N),
            "universal_norms": _universal_norms(LONG_N),
            "one": _one(LONG_N),
            "half_power": GrowthSequence.factorial_ratio("2^-n", LONG_N, geometric=0.5),
        }
        x = sequences[label]
        plain = precedes_prefix(x, _one(LONG_N), RADII, LONG_N)
        scaled = precedes_prefix(x.times_geometric(lam, power), _one(LONG_N), RADII, LONG_N)
        assert scaled.relation == plain.relation

    @pytest.mark.parametrize("lam", [2.0, 10.0])
    @pytest.mark.parametrize("power", [1.0, 3.0])
    def test_scaled_factorial_holds_on_long_prefix(self, lam: float, power: float) -> None:
        """λⁿnᵃ/n! と λⁿnᵃ(n+1)/(2ⁿn!) が長い区間で holds_on_prefix になること"""
        for x in (_inverse_factorial(max_index=LONG_N), _universal_norms(LONG_N)):
            verdict = precedes_prefix(x.times_geometric(lam, power), _one(LONG_N), RADII, LONG_N)
            assert verdict.relation == Relation.HOLDS

    def test_transient_hump_is_not_a_witness(self) -> None:
        """末尾窓より前の一時的な山は violated_at の証拠にならないこと"""
        x = GrowthSequence.factorial_ratio("25^n/n!", 120, factorials=[[1, 0, -1]], geometric=25.0)
        # n = 25 付近で 10⁹ を超えるが、末尾窓では 1 未満まで減少する
        assert max(x.log_terms[20:30]) > math.log(1e6)
        verdict = precedes_prefix(x, _one(120), [1.0], 120)
        assert verdict.relation == Relation.HOLDS
        assert verdict.witness_index is None

    def test_scaled_factorial_is_not_violated_by_early_growth(self) -> None:
        """N = 40 で 2ⁿn/n! の初期の増加が violated_at にならないこと"""
        x = _inverse_factorial().times_geometric(2.0, 1.0)
        verdict = precedes_prefix(x, _one(), RADII, N)
        assert verdict.relation != Relation.VIOLATED

    @pytest.mark.parametrize("x", [_inverse_factorial(), _universal_norms(), _inverse_factorial(2)])
    def test_holds_implies_root_tail_below_inverse_radius(self, x: GrowthSequence) -> None:
        """holds_on_prefix なら末尾窓の n 乗根が 1/r_max 未満であること"""
        verdict = precedes_prefix(x, _one(), RADII, N)
        assert verdict.relation == Relation.HOLDS
        profile = nth_root_profile(x, _one(), N)
        assert max(profile[n - 1] for n in tail_window(N)) < 1 / max(RADII)


class TestNthRootProfile:
    """nth_root_profile関数のテスト"""

    def test_inverse_factorial_profile(self) -> None:
        """1/n! の n 乗根が n = 10 で約0.22になり減少すること"""
        profile = nth_root_profile(_inverse_factorial(), _one(), 20)
        assert profile[9] == pytest.approx(0.22, abs=0.005)
        assert all(b < a for a, b in zip(profile, profile[1:], strict=False))

    def test_equal_sequences_give_one(self) -> None:
        """x = y なら定数1になること"""
        x = _universal_norms()
        assert nth_root_profile(x, x, 10) == [1.0] * 10

    def test_universal_norms_below_half(self) -> None:
        """(n+1)/(2ⁿn!) の n 乗根が n ≥ 4 で0.5未満になること"""
        profile = nth_root_profile(_universal_norms(), _one(), 20)
        assert profile[3] == pytest.approx(0.338, abs=0.002)
        assert all(v < 0.5 for v in profile[3:])

    def test_rejects_zero_prefix(self) -> None:
        """N < 1 はエラーになること"""
        with pytest.raises(ValueError):
            nth_root_profile(_one(), _one(), 0)


class TestRadiusEstimate:
    """radius_estimate関数のテスト"""

    def test_universal_entire_coefficients(self) -> None:
        """普遍コサイクルの重み付き係数の半径が1/2付近になること"""
        coeffs = GrowthSequence.factorial_ratio(
            "(2n)!(n+1)/(2^n n! n!)",
            N,
            factorials=[[2, 0, 1], [1, 0, -2]],
            geometric=0.5,
            poly=[[1, 1]],
        )
        assert 0.45 <= radius_estimate(coeffs, N) <= 0.55

    def test_exponential_series_is_entire(self) -> None:
        """1/n! の半径が無限大になること"""
        assert radius_estimate(_inverse_factorial(), N) == math.inf

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.0, 4.0])
    def test_geometric_series(self, a: float) -> None:
        """aⁿ の半径が 1/a になること"""
        coeffs = GrowthSequence.factorial_ratio(f"{a}^n", N, geometric=a)
        assert radius_estimate(coeffs, N) == pytest.approx(1 / a, rel=0.05)

    def test_requires_eight_terms(self) -> None:
        """N < 8 はエラーになること"""
        with pytest.raises(PrefixTooShortError):
            radius_estimate(_one(), 7)


class TestEntireTest:
    """entire_test関数のテスト"""

    def test_unit_coefficients_are_not_entire(self) -> None:
        """‖φ_{2n}‖ = n!/(2n)! は係数1で entire でないこと"""
        norms = [math.factorial(n) / math.factorial(2 * n) for n in range(N + 1)]
        verdict = entire_test(norms, 0, N)
        assert verdict.radius == pytest.approx(1.0)
        assert not verdict.entire_consistent

    def test_inverse_factorial_coefficients_are_entire(self) -> None:
        """‖φ_{2n}‖ = 1/(2n)! は係数 1/n! で entire であること"""
        norms = [1 / math.factorial(2 * n) for n in range(N + 1)]
        verdict = entire_test(norms, 0, N)
        assert verdict.entire_consistent
        assert verdict.radius == math.inf

    def test_universal_cocycle_is_not_entire(self) -> None:
        """普遍コサイクルのノルムは entire でないこと"""
        norms = [(n + 1) / (2**n * math.factorial(n)) for n in range(N + 1)]
        verdict = entire_test(norms, 0, N)
        assert not verdict.entire_consistent
        assert 0.45 <= verdict.radius <= 0.55

    def test_odd_parity_weights(self) -> None:
        """奇数次では (2n+1)!/n! の重みを使うこと"""
        norms = [math.factorial(n) / math.factorial(2 * n + 1) for n in range(N + 1)]
        verdict = entire_test(norms, 1, N)
        assert verdict.radius == pytest.approx(1.0)

    def test_zero_norms_are_entire(self) -> None:
        """零コチェインは entire であること"""
        verdict = entire_test([0.0] * (N + 1), 0, N)
        assert verdict.entire_consistent

    def test_rejects_bad_parity(self) -> None:
        """parity が 0, 1 以外ならエラーになること"""
        with pytest.raises(ValueError):
            entire_test([1.0] * 10, 2, 9)


class TestClassifySequence:
    """classify_sequence関数のテスト"""

    def test_summary_contains_all_parts(self) -> None:
        """判定・プロファイル・半径がまとめて返ること"""
        result = classify_sequence(_universal_norms(), _one(), RADII, N)
        assert result.verdict.relation == Relation.HOLDS
        assert len(result.root_profile) == N
        assert result.radius == math.inf
        assert result.root_tail_max < 1 / 8
